#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
test_h10_server.py - Tests für die JSON-API von h10_server.py

Erstellt: 19.10.2026, 01:20
"""

import pytest

from h10_server import app


@pytest.fixture
def client():
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client


def test_status(client):
    data = client.get('/api/status').get_json()
    assert data['success'] is True
    assert data['system']['name'] == "h10cert"
    assert data['errors'] == []
    assert data['datenbank'].endswith("curves.json")


def test_densities(client):
    data = client.get('/api/densities').get_json()
    assert [row['density'] for row in data['rows']][:3] == ["9/16", "103/128", "933/1024"]


def test_kurve(client):
    data = client.get('/api/kurven/704g1').get_json()
    assert data['kurve']['conductor'] == 704
    response = client.get('/api/kurven/11a1')
    assert response.status_code == 404
    assert response.get_json()['success'] is False


def test_member(client):
    data = client.get('/api/member?kurve=557b1&p=2').get_json()
    assert data['in_P'] is True
    assert client.get('/api/member?kurve=557b1&p=x').status_code == 400
    assert client.get('/api/member?kurve=557b1').status_code == 400
    assert client.get('/api/member?kurve=11a1&p=2').status_code == 404


def test_large_p(client):
    data = client.get('/api/member?kurve=557b1&p=10000019').get_json()
    assert data['in_P'] is False
    data = client.get('/api/certify?family=A&p=10000019&q=43').get_json()
    assert data['certificate']['verdict'] == "NotCertified"


def test_certify(client):
    data = client.get('/api/certify?family=B&p=5&q=23&D=7').get_json()
    assert data['success'] is True
    assert data['certificate']['verdict'] == "Insoluble"
    assert data['certificate']['field'] == "Q(5^(1/3), sqrt(161))"


def test_certify_assertion(client):
    data = client.get('/api/certify?family=cong&p=5&q=3&assume_congruent=1').get_json()
    assert data['certificate']['flags'] == ["UNVERIFIED"]


def test_certify_not_certified_is_success(client):
    data = client.get('/api/certify?family=A&p=3&q=43').get_json()
    assert data['success'] is True
    assert data['certificate']['verdict'] == "NotCertified"
    assert "p = 3 ist ausgeschlossen" in data['certificate']['reason']


@pytest.mark.parametrize("query", [
    "family=B&p=5&q=23&D=11",
    "family=B&p=5&q=23",
    "family=Z&p=5&q=23",
    "family=A&p=4&q=43",
    "family=A&q=43",
    "family=cong&p=5&q=5&witness=1,1",
])
def test_certify_errors(client, query):
    response = client.get(f'/api/certify?{query}')
    assert response.status_code == 400
    assert response.get_json()['success'] is False
