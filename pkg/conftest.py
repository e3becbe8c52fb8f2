#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
conftest.py - Gemeinsame pytest-Fixtures für h10cert

Jeder Test läuft mit einer Kopie von config.json, deren Sweep-Cache im
tmp-Verzeichnis liegt; danach wird die Standard-Konfiguration neu geladen.

Erstellt: 18.10.2026, 23:00
"""

import json
import os

import pytest

import config
import curve_db


@pytest.fixture(autouse=True)
def isolated_config(tmp_path):
    with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.json"),
              'r', encoding='utf-8') as f:
        data = json.load(f)
    data["sweep"]["cache_datei"] = str(tmp_path / "sweep_cache.json")
    path = tmp_path / "config.json"
    path.write_text(json.dumps(data), encoding='utf-8')

    assert config.reload(str(path))
    curve_db.use_db(config.get_curve_db_path())
    yield path
    config.reload()
    curve_db.use_db(config.get_curve_db_path())


@pytest.fixture
def write_config(tmp_path):
    """Schreibt eine veränderte config.json und lädt sie."""
    def _write(change):
        path = tmp_path / "config.json"
        data = json.loads(path.read_text(encoding='utf-8'))
        change(data)
        path.write_text(json.dumps(data), encoding='utf-8')
        return config.reload(str(path))
    return _write
