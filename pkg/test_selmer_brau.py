#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
test_selmer_brau.py - Tests für selmer_brau.py

delta_v für jede Kombination aus Reduktionstyp und Zerlegung mit
synthetischen PlaceData, dazu Stabilitäts-Zertifikate für die ersten
Primzahlen aus P(704g1,3) und P(32a2,3).

Erstellt: 19.10.2026, 00:20
Modified: 19.10.2026, 10:25 - Zerlegung gegen Kuben mod r, Schranken für delta_v
"""

import itertools

import pytest

import curve_db
from arith import is_lpower_free, sieve_primes
from chebotarev import in_P
from ec_model import make_curve
from selmer_brau import (DELTA_ONE_OR_TWO, DELTA_UNRESOLVED, GOOD_AWAY_FROM_L,
                         GOOD_ORDINARY_ABOVE_L, GOOD_SUPERSINGULAR_ABOVE_L, INERT,
                         PLACE_ADDITIVE, PLACE_NONSPLIT_MULT, PLACE_SPLIT_MULT, RAMIFIED, SPLIT,
                         VERDICT_INCONCLUSIVE, VERDICT_VANISHES, PlaceData, SelmerError, delta_v,
                         place_data, places_above, rank_stability_certificate, recheck,
                         residual_torsion_dim, splitting_in_kummer, tamagawa_product_qmu3,
                         u_r_a)

# y^2 + xy = x^3 + 7: multiplikativ bei 7, j = -1/21175
TATE7 = make_curve(1, 0, 0, 0, 7)


def _pd(**kwargs):
    values = dict(r=7, f_v=1, q_v=7, splitting=SPLIT, reduction=GOOD_AWAY_FROM_L,
                  tamagawa=1, residual_torsion_dim=0, places=2, a=2)
    values.update(kwargs)
    return PlaceData(**values)


def _first_in_P(label, count):
    rec = curve_db.get(label)
    return [p for p in sieve_primes(200) if in_P(rec, p)][:count]

# =============================================================================
# Zerlegung in der Kummer-Schicht
# =============================================================================

@pytest.mark.parametrize("r, a, expected", [
    (2, 2, RAMIFIED),
    (7, 14, RAMIFIED),
    (3, 10, SPLIT),
    (3, 17, SPLIT),
    (3, 2, RAMIFIED),
    (3, 6, RAMIFIED),
    (7, 2, INERT),
    (7, 6, SPLIT),
    (5, 2, SPLIT),
    (13, 5, SPLIT),
    (13, 2, INERT),
])
def test_splitting_in_kummer(r, a, expected):
    assert splitting_in_kummer(r, a) == expected


@pytest.mark.parametrize("a", [1, 0, -5, 8, 2 * 27])
def test_splitting_rejects_invalid_a(a):
    with pytest.raises(SelmerError):
        splitting_in_kummer(7, a)


def test_places_above():
    assert places_above(7) == 2
    assert places_above(5) == 1
    assert places_above(3) == 1

# =============================================================================
# u_(r,a)
# =============================================================================

def test_u_r_a():
    assert u_r_a(TATE7, 7, 7) == 6
    assert u_r_a(TATE7, 7, 14) == 5
    with pytest.raises(SelmerError):
        u_r_a(TATE7, 13, 7)

def test_splitting_away_from_3a_matches_cubes():
    for r in sieve_primes(100):
        if r == 3:
            continue
        cubes = {x ** 3 % r for x in range(1, r)}
        for a in range(2, 80):
            if a % r == 0 or not is_lpower_free(a, 3):
                continue
            splitting = splitting_in_kummer(r, a)
            assert splitting != RAMIFIED
            assert (splitting == SPLIT) == (a % r in cubes)
            if r % 3 == 2:
                assert splitting == SPLIT

# =============================================================================
# delta_v Tabelle
# =============================================================================

@pytest.mark.parametrize("reduction", [GOOD_AWAY_FROM_L, GOOD_ORDINARY_ABOVE_L,
                                       GOOD_SUPERSINGULAR_ABOVE_L])
@pytest.mark.parametrize("splitting", [SPLIT, INERT])
def test_delta_good_unramified(reduction, splitting):
    pd = _pd(reduction=reduction, splitting=splitting, residual_torsion_dim=1)
    assert delta_v(pd, 2, TATE7) == 0


def test_delta_good_away_ramified_is_residual_dim():
    for dim in (0, 1, 2):
        pd = _pd(splitting=RAMIFIED, residual_torsion_dim=dim, a=7)
        assert delta_v(pd, 7, TATE7) == dim


def test_delta_ordinary_above_l_ramified():
    pd = PlaceData(r=3, f_v=1, q_v=3, splitting=RAMIFIED, reduction=GOOD_ORDINARY_ABOVE_L,
                   tamagawa=1, residual_torsion_dim=0, a=2)
    assert delta_v(pd, 2, TATE7) == 0
    pd = PlaceData(r=3, f_v=1, q_v=3, splitting=RAMIFIED, reduction=GOOD_ORDINARY_ABOVE_L,
                   tamagawa=1, residual_torsion_dim=1, a=2)
    assert delta_v(pd, 2, TATE7) == DELTA_ONE_OR_TWO


def test_delta_supersingular_above_l_ramified():
    pd = PlaceData(r=3, f_v=1, q_v=3, splitting=RAMIFIED,
                   reduction=GOOD_SUPERSINGULAR_ABOVE_L, tamagawa=1, residual_torsion_dim=0, a=6)
    assert delta_v(pd, 6, TATE7) == 1
    pd = PlaceData(r=3, f_v=1, q_v=3, splitting=RAMIFIED,
                   reduction=GOOD_SUPERSINGULAR_ABOVE_L, tamagawa=1, residual_torsion_dim=0, a=5)
    assert delta_v(pd, 5, TATE7) == 0


def test_delta_split_mult_ramified_u_gate():
    pd = _pd(reduction=PLACE_SPLIT_MULT, splitting=RAMIFIED, residual_torsion_dim=None, a=7)
    assert delta_v(pd, 7, TATE7) == 1
    pd = _pd(reduction=PLACE_SPLIT_MULT, splitting=RAMIFIED, residual_torsion_dim=None, a=14)
    assert delta_v(pd, 14, TATE7) == 0


@pytest.mark.parametrize("tamagawa, expected", [(3, 1), (6, 1), (1, 0), (2, 0)])
def test_delta_split_mult_inert(tamagawa, expected):
    pd = _pd(reduction=PLACE_SPLIT_MULT, splitting=INERT, tamagawa=tamagawa,
             residual_torsion_dim=None)
    assert delta_v(pd, 2, TATE7) == expected


def test_delta_split_mult_split():
    pd = _pd(reduction=PLACE_SPLIT_MULT, splitting=SPLIT, tamagawa=3, residual_torsion_dim=None)
    assert delta_v(pd, 2, TATE7) == 0


@pytest.mark.parametrize("splitting, a", [(SPLIT, 2), (INERT, 2), (RAMIFIED, 7)])
def test_delta_nonsplit_mult(splitting, a):
    pd = _pd(reduction=PLACE_NONSPLIT_MULT, splitting=splitting, tamagawa=2,
             residual_torsion_dim=None, a=a)
    assert delta_v(pd, a, TATE7) == 0


def test_delta_additive():
    pd = _pd(reduction=PLACE_ADDITIVE, tamagawa=2, residual_torsion_dim=None)
    assert delta_v(pd, 2, TATE7) == 0
    pd = _pd(reduction=PLACE_ADDITIVE, tamagawa=3, residual_torsion_dim=None)
    assert delta_v(pd, 2, TATE7) == DELTA_UNRESOLVED
    pd = _pd(reduction=PLACE_ADDITIVE, tamagawa=None, residual_torsion_dim=None)
    with pytest.raises(SelmerError):
        delta_v(pd, 2, TATE7)
    pd = _pd(reduction=PLACE_ADDITIVE, splitting=RAMIFIED, tamagawa=1,
             residual_torsion_dim=None, a=7)
    with pytest.raises(SelmerError):
        delta_v(pd, 7, TATE7)


def test_delta_numeric_values_bounded():
    reductions = [GOOD_AWAY_FROM_L, GOOD_ORDINARY_ABOVE_L, GOOD_SUPERSINGULAR_ABOVE_L,
                  PLACE_SPLIT_MULT, PLACE_NONSPLIT_MULT, PLACE_ADDITIVE]
    for reduction, splitting, dim, tamagawa in itertools.product(
            reductions, [SPLIT, INERT, RAMIFIED], [0, 1, 2], [1, 2, 3, 6]):
        if reduction == PLACE_ADDITIVE and splitting == RAMIFIED:
            continue
        for a in ((7, 14) if splitting == RAMIFIED else (2,)):
            pd = _pd(reduction=reduction, splitting=splitting, residual_torsion_dim=dim,
                     tamagawa=tamagawa, a=a)
            delta = delta_v(pd, a, TATE7)
            if delta in (DELTA_ONE_OR_TWO, DELTA_UNRESOLVED):
                continue
            assert 0 <= delta <= max(2, dim)


def test_place_data_invariants():
    with pytest.raises(SelmerError):
        _pd(q_v=5)
    with pytest.raises(SelmerError):
        _pd(splitting=RAMIFIED, a=2)

# =============================================================================
# Rest-Torsion
# =============================================================================

def test_residual_torsion_dim():
    assert residual_torsion_dim(curve_db.get("704g1").model, 13, 1) == 1
    assert residual_torsion_dim(curve_db.get("704g1").model, 5, 2) == 0
    assert residual_torsion_dim(curve_db.get("32a2").model, 11, 2) == 2
    assert residual_torsion_dim(curve_db.get("557b1").model, 2, 2) == 0


def test_residual_torsion_dim_errors():
    model = curve_db.get("704g1").model
    with pytest.raises(SelmerError):
        residual_torsion_dim(model, 3, 1)
    with pytest.raises(SelmerError):
        residual_torsion_dim(model, 11, 2)
    with pytest.raises(SelmerError):
        residual_torsion_dim(model, 7, 3)

# =============================================================================
# Stellen-Daten aus der Datenbank
# =============================================================================

def test_place_data_557b1():
    rec = curve_db.get("557b1")
    pd = place_data(rec, 557, 2)
    assert pd.reduction == PLACE_SPLIT_MULT
    assert pd.splitting == SPLIT
    assert pd.tamagawa == 1
    pd = place_data(rec, 2, 2)
    assert pd.reduction == GOOD_AWAY_FROM_L
    assert pd.splitting == RAMIFIED
    assert pd.q_v == 4
    assert pd.residual_torsion_dim == 0
    pd = place_data(rec, 3, 2)
    assert pd.reduction == GOOD_ORDINARY_ABOVE_L


def test_place_data_32a2():
    rec = curve_db.get("32a2")
    assert place_data(rec, 3, 5).reduction == GOOD_SUPERSINGULAR_ABOVE_L
    pd = place_data(rec, 2, 5)
    assert pd.reduction == PLACE_ADDITIVE
    assert pd.tamagawa == 2
    assert tamagawa_product_qmu3(rec) == 2

# =============================================================================
# Zertifikate
# =============================================================================

def test_certificate_557b1():
    rec = curve_db.get("557b1")
    cert = rank_stability_certificate(rec, 2)
    assert cert.verdict == VERDICT_VANISHES
    assert cert.total == 0
    assert [row.data.r for row in cert.places] == [2, 3, 557]
    assert all(row.delta == 0 for row in cert.places)
    assert cert.first_failing_premise() is None
    assert recheck(cert, rec)


def test_certificate_not_lpower_free():
    cert = rank_stability_certificate(curve_db.get("557b1"), 8)
    assert cert.verdict == VERDICT_INCONCLUSIVE
    assert cert.reason == "a ist l-potenzfrei"
    assert cert.total is None


def test_certificate_prime_outside_P():
    cert = rank_stability_certificate(curve_db.get("704g1"), 13)
    assert cert.verdict == VERDICT_INCONCLUSIVE
    assert cert.reason == "Primteiler von a in P(E,l)"


def test_certificate_rejects_small_a():
    with pytest.raises(SelmerError):
        rank_stability_certificate(curve_db.get("557b1"), 1)


@pytest.mark.parametrize("label", ["704g1", "32a2"])
def test_certificates_for_first_primes_in_P(label):
    rec = curve_db.get(label)
    primes = _first_in_P(label, 10)
    assert len(primes) == 10
    for p in primes:
        cert = rank_stability_certificate(rec, p)
        assert cert.verdict == VERDICT_VANISHES, (label, p, cert.reason)
        assert cert.total == 0
        assert cert.cross_check
        for row in cert.places:
            if row.data.reduction in (GOOD_AWAY_FROM_L,) and row.data.splitting == RAMIFIED:
                assert row.data.residual_torsion_dim == 0


def test_certificate_json_is_deterministic():
    rec = curve_db.get("32a2")
    first = rank_stability_certificate(rec, 5).to_json()
    assert first == rank_stability_certificate(rec, 5).to_json()
    assert '"verdict": "SelmerVanishes"' in first
