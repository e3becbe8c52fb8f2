#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
test_ec_model.py - Tests für ec_model.py

Punktzahlen, Weil-Rekursion, Parität von a_q und Reduktionstypen der
Datenbank-Kurven.

Erstellt: 18.10.2026, 23:15
Modified: 19.10.2026, 10:10 - Invarianten-Identitäten auf zufälligen Modellen, Twists
"""

import random
from fractions import Fraction

import pytest

import curve_db
from arith import sieve_primes
from ec_model import (ADDITIVE, GOOD, NONSPLIT_MULT, SOURCE_DATABASE, SPLIT_MULT, CurveError,
                      ap_parity, clear_trace_cache, count_points_extension, count_points_fp,
                      division_cubic, division_psi3, hasse_bound_ok, is_good, make_curve,
                      quadratic_twist, reduction_info, trace_ap, trace_extension,
                      weil_bound_ok)


@pytest.fixture
def e32():
    return make_curve(0, 0, 0, -1, 0)


def test_make_curve_invariants(e32):
    assert e32.disc == 64
    assert e32.c4 == 48
    assert e32.j == Fraction(1728)
    assert str(e32) == "[0,0,0,-1,0]"
    assert e32.ainvs == (0, 0, 0, -1, 0)


def test_make_curve_singular():
    with pytest.raises(CurveError):
        make_curve(0, 0, 0, 0, 0)


def test_quadratic_twist_keeps_j(e32):
    twist = quadratic_twist(e32, -1)
    assert twist.j == e32.j
    assert twist.ainvs == (0, 0, 0, -16, 0)
    with pytest.raises(CurveError):
        quadratic_twist(e32, 4)
    with pytest.raises(CurveError):
        quadratic_twist(e32, 0)


def test_division_polynomials(e32):
    assert division_cubic(e32) == [4, 0, -4, 0]
    assert division_psi3(e32) == [3, 0, -6, 0, -1]


@pytest.mark.parametrize("label, table", [
    ("704g1", {3: -1, 5: -1, 7: 4, 13: 2, 17: 0, 19: 2, 23: 9, 29: -4, 31: 5, 37: 9, 41: 2, 43: 6}),
    ("1472j1", {3: -1, 5: 4, 7: -2, 11: -4, 13: 5, 17: -2, 19: 6, 29: -1, 31: 9, 37: 4, 41: 3, 43: 8}),
    ("32a2", {3: 0, 5: -2, 7: 0, 11: 0, 13: 6, 17: 2, 19: 0, 23: 0, 29: -10, 31: 0, 37: -2,
              41: 10, 43: 0}),
])
def test_trace_table(label, table):
    model = curve_db.get(label).model
    for p, a_p in table.items():
        assert trace_ap(model, p) == a_p


@pytest.mark.parametrize("label, count", [("557b1", 2), ("704g1", 5), ("1472j1", 5), ("32a2", 4)])
def test_points_over_f3(label, count):
    assert count_points_fp(curve_db.get(label).model, 3) == count


def test_count_points_errors():
    model = curve_db.get("704g1").model
    with pytest.raises(CurveError):
        count_points_fp(model, 11)
    with pytest.raises(CurveError):
        count_points_fp(model, 2)
    with pytest.raises(CurveError):
        ap_parity(model, 2)


def test_trace_extension():
    assert trace_extension(-1, 5, 1) == -1
    assert trace_extension(-1, 5, 2) == -9
    assert trace_extension(0, 7, 2) == -14
    assert trace_extension(2, 3, 3) == -10
    with pytest.raises(CurveError):
        trace_extension(10, 5, 2)
    with pytest.raises(CurveError):
        trace_extension(1, 5, 0)


def test_count_points_extension():
    assert count_points_extension(curve_db.get("704g1").model, 5, 2) == 35
    assert count_points_extension(curve_db.get("32a2").model, 5, 2) == 32


def test_trace_cache_is_transparent():
    model = curve_db.get("1472j1").model
    first = trace_ap(model, 31)
    clear_trace_cache()
    assert trace_ap(model, 31) == first == 9


def test_hasse_weil_and_parity_for_database_curves():
    for rec in curve_db.all_records():
        for p in sieve_primes(1000):
            if not is_good(rec.model, p):
                continue
            a_p = trace_ap(rec.model, p)
            assert hasse_bound_ok(a_p, p), (rec.label, p)
            for f in range(1, 5):
                assert weil_bound_ok(trace_extension(a_p, p, f), p, f), (rec.label, p, f)
            if p != 2:
                assert ap_parity(rec.model, p) == a_p % 2, (rec.label, p)


def test_reduction_info_kinds():
    rec = curve_db.get("557b1")
    info = reduction_info(rec.model, 557, rec)
    assert info.kind == SPLIT_MULT
    assert info.tamagawa == 1

    rec = curve_db.get("704g1")
    assert reduction_info(rec.model, 11, rec).kind == NONSPLIT_MULT
    info = reduction_info(rec.model, 2, rec)
    assert info.kind == ADDITIVE
    assert info.tamagawa == 1
    assert info.source == SOURCE_DATABASE
    assert reduction_info(rec.model, 5, rec).kind == GOOD


def test_reduction_info_additive_without_record():
    model = curve_db.get("32a2").model
    info = reduction_info(model, 2)
    assert info.kind == ADDITIVE
    assert info.tamagawa is None

# =============================================================================
# Invarianten-Identitäten und Twists
# =============================================================================

def _random_models(count, seed=20261019):
    rng = random.Random(seed)
    models = []
    while len(models) < count:
        try:
            models.append(make_curve(*(rng.randint(-50, 50) for _ in range(5))))
        except CurveError:
            continue
    return models


def test_invariant_identities():
    for E in _random_models(200):
        assert 4 * E.b8 == E.b2 * E.b6 - E.b4 ** 2
        assert 1728 * E.disc == E.c4 ** 3 - E.c6 ** 2
        assert E.j == Fraction(E.c4 ** 3, E.disc)


@pytest.mark.parametrize("d", [-1, 2, -3, 5, -7, 10, -11])
def test_twist_scaling(d):
    for E in _random_models(50):
        T = quadratic_twist(E, d)
        assert T.c4 == 16 * d ** 2 * E.c4
        assert T.c6 == 64 * d ** 3 * E.c6
        assert T.disc == 4096 * d ** 6 * E.disc
        assert T.j == E.j


@pytest.mark.parametrize("d", [-1, 2, -3, 5, -7])
def test_double_twist_is_isomorphic(d):
    u = 4 * d
    for E in _random_models(50):
        T = quadratic_twist(quadratic_twist(E, d), d)
        assert T.c4 == u ** 4 * E.c4
        assert T.c6 == u ** 6 * E.c6
        assert T.j == E.j


@pytest.mark.parametrize("q", [5, 6, 7, 13, 15])
def test_twist_of_32a2_is_congruent_curve(q):
    E = make_curve(0, 0, 0, -1, 0)
    T = quadratic_twist(E, q)
    assert T.j == make_curve(0, 0, 0, -q * q, 0).j == 1728
    assert T.ainvs == (0, 0, 0, -16 * q * q, 0)
