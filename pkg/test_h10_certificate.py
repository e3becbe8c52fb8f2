#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
test_h10_certificate.py - Tests für h10_certificate.py

Zeugen (p, q) sind jeweils die kleinsten aus den Sweeps:
    A:    p = 2 in P(557b1,3),  q = 43 in der Q-Vereinigung
    B:    p = 5 in P(704g1,3),  q = 23 in Q^-(704g1, Q(sqrt(-7)))
    C:    p = 41 nur in P(704g1,3), q = 71 in Q(704g1, 1472j1, Q(sqrt(-7)))
    cong: p = 5 in P(32a2,3), q = 5 mit Punkt (-4/5, 6/25)

Erstellt: 19.10.2026, 00:45
"""

from fractions import Fraction

import pytest

import curve_db
import h10_certificate
from chebotarev import in_P, in_Q_single, in_Q_two_curves, SIGN_MINUS
from h10_certificate import (FLAG_UNVERIFIED, VERDICT_INSOLUBLE, VERDICT_NOT_CERTIFIED,
                             CertificateError, CongruentWitness, certify, certify_family_A,
                             certify_family_B, certify_family_C, certify_family_cong,
                             emit_density_table, find_congruent_witness, parse_witness,
                             reverify, sweep_report)

# =============================================================================
# Familie A
# =============================================================================

def test_family_A_insoluble():
    cert = certify_family_A(2, 43)
    assert cert.verdict == VERDICT_INSOLUBLE
    assert cert.certifying_curve == "557b1"
    assert cert.field_L == "Q(2^(1/3), sqrt(-43))"
    assert all(entry.holds for entry in cert.ledger)
    assert any("rank 557b1(Q(sqrt(-43)))" in entry.name for entry in cert.ledger)
    assert cert.stability["557b1"]["verdict"] == "SelmerVanishes"


def test_family_A_conductor_exclusion():
    cert = certify_family_A(557, 43)
    assert cert.verdict == VERDICT_NOT_CERTIFIED
    assert "teilt N" in cert.reason
    assert cert.certifying_curve is None


def test_family_A_q_two():
    cert = certify_family_A(2, 2)
    assert cert.verdict == VERDICT_NOT_CERTIFIED
    assert "q = 2 teilt 2N" in cert.reason


def test_family_A_p_beyond_point_count():
    cert = certify_family_A(10000019, 43)
    assert cert.verdict == VERDICT_NOT_CERTIFIED
    assert "Punktzählung nicht möglich" in cert.reason


def test_family_A_non_prime():
    with pytest.raises(CertificateError):
        certify_family_A(4, 43)
    with pytest.raises(CertificateError):
        certify_family_A(2, 45)

# =============================================================================
# Familie B
# =============================================================================

def test_family_B_insoluble():
    cert = certify_family_B(5, 23, 7)
    assert cert.verdict == VERDICT_INSOLUBLE
    assert cert.certifying_curve == "704g1"
    assert cert.inputs == {"p": 5, "q": 23, "D": 7}
    assert cert.field_L == "Q(5^(1/3), sqrt(161))"


def test_family_B_D_outside_set():
    with pytest.raises(CertificateError):
        certify_family_B(5, 23, 11)


def test_family_B_sign():
    cert = certify_family_B(5, 29, 7)
    assert cert.verdict == VERDICT_NOT_CERTIFIED
    assert "nicht -1 mod 4" in cert.reason

# =============================================================================
# Familie C
# =============================================================================

def test_family_C_via_704g1():
    cert = certify_family_C(41, 71, 7)
    assert cert.verdict == VERDICT_INSOLUBLE
    assert cert.certifying_curve == "704g1"
    assert "704g1" in cert.stability
    assert "zertifiziert durch 704g1" in cert.ledger[0].detail


def test_family_C_tie_break():
    rec_a, rec_b = curve_db.get("704g1"), curve_db.get("1472j1")
    assert in_P(rec_a, 5) and in_P(rec_b, 5)
    cert = certify_family_C(5, 71, 7)
    assert cert.verdict == VERDICT_INSOLUBLE
    assert cert.certifying_curve == "1472j1"


def test_family_C_neither_curve():
    cert = certify_family_C(13, 71, 7)
    assert cert.verdict == VERDICT_NOT_CERTIFIED
    assert cert.reason.startswith("p in P und Sel_3 = 0")


def test_family_C_q_not_split():
    cert = certify_family_C(41, 3, 7)
    assert cert.verdict == VERDICT_NOT_CERTIFIED
    assert "zerfällt nicht" in cert.reason


def test_family_C_D_615():
    cert = certify_family_C(41, 31, 615)
    assert cert.verdict == VERDICT_INSOLUBLE
    with pytest.raises(CertificateError):
        certify_family_C(41, 71, 39)

# =============================================================================
# Kongruente Zahlen
# =============================================================================

def test_congruent_search_q5():
    witness = find_congruent_witness(5)
    assert witness == CongruentWitness(q=5, x=Fraction(-4, 5), y=Fraction(6, 25))
    assert witness.verify()


def test_congruent_search_small_bounds():
    assert find_congruent_witness(3, max_zaehler=200, max_nenner=5) is None


def test_family_cong_search():
    cert = certify_family_cong(5, 5)
    assert cert.verdict == VERDICT_INSOLUBLE
    assert cert.flags == ()
    assert "(-4/5, 6/25)" in cert.ledger[2].detail


def test_family_cong_q3_not_certified():
    cert = certify_family_cong(5, 3)
    assert cert.verdict == VERDICT_NOT_CERTIFIED
    assert "Suche erschöpft" in cert.reason


def test_family_cong_assertion():
    cert = certify_family_cong(5, 3, assume_congruent=True)
    assert cert.verdict == VERDICT_INSOLUBLE
    assert cert.flags == (FLAG_UNVERIFIED,)
    assert reverify(cert)


def test_family_cong_witness():
    cert = certify_family_cong(7, 5, witness="-4/5,6/25")
    assert cert.verdict == VERDICT_INSOLUBLE
    with pytest.raises(CertificateError):
        certify_family_cong(7, 5, witness="1,1")
    with pytest.raises(CertificateError):
        certify_family_cong(7, 5, witness="abc")
    with pytest.raises(CertificateError):
        parse_witness("1/0,2", 5)

# =============================================================================
# Determinismus und Korrektheit
# =============================================================================

def test_certificate_is_deterministic():
    first = certify_family_B(5, 23, 7).to_json()
    assert first == certify_family_B(5, 23, 7).to_json()
    assert '"schema_version": 1' in first


@pytest.mark.parametrize("family, p, q, D", [("A", 2, 43, None), ("B", 5, 23, 7),
                                             ("C", 41, 71, 7), ("cong", 5, 5, None)])
def test_reverify(family, p, q, D):
    assert reverify(certify(family, p, q, D))


def test_insoluble_predicates_hold_independently():
    e704, e1472 = curve_db.get("704g1"), curve_db.get("1472j1")
    assert in_P(e704, 41)
    assert in_Q_two_curves(e704, e1472, -7, 71)
    assert in_Q_single(e704, -7, 23, SIGN_MINUS)


def test_dispatcher_errors():
    with pytest.raises(CertificateError):
        certify("X", 5, 23)
    with pytest.raises(CertificateError):
        certify("B", 5, 23)

# =============================================================================
# Dichte-Tabelle und Sweep-Report
# =============================================================================

def test_density_table():
    rows = emit_density_table()
    assert [r.n for r in rows] == list(range(1, 8))
    assert rows[0].value == Fraction(9, 16)
    assert rows[0].decimal == "0.5625"
    assert rows[1].value == Fraction(103, 128)
    assert rows[1].decimal == "0.8046875"
    assert rows[4].value == Fraction(64269, 65536)
    assert rows[4].decimal.startswith("0.9806671")
    assert rows[6].value == Fraction(4175733, 4194304)
    assert rows[0].method == "Aufzählung"
    assert rows[6].method == "Formel"


def test_sweep_report_limits():
    with pytest.raises(CertificateError):
        sweep_report("A", 50)
    with pytest.raises(CertificateError):
        sweep_report("A", 10 ** 9)
    with pytest.raises(CertificateError):
        sweep_report("X", 1000)


def test_sweep_report_cong():
    report = sweep_report("cong", 10 ** 4)
    assert len(report.estimates) == 1
    assert report.estimates[0].predicate == "P_set(32a2,3)"
    assert report.estimates[0].theoretical == Fraction(11, 16)
    lines = report.to_csv().splitlines()
    assert lines[0] == "predicate,X,hits,scanned,empirical,theoretical,deviation"
    assert lines[1].startswith("P_set(32a2,3),10000,")
    assert len(report.series["P_set(32a2,3)"]) == 10


def test_sweep_report_family_A():
    report = sweep_report("A", 2000)
    assert [e.predicate for e in report.estimates] == [
        "P_set(557b1,3)", "P_gfp(557b1,3)", "Q_union(557b1,[-7,-79,-127],-)"]
    assert [str(e.theoretical) for e in report.estimates] == ["9/16", "5/16", "7/48"]
    assert report.to_dict()["X"] == 2000


def test_sweep_report_family_C_annotation():
    report = sweep_report("C", 1000)
    assert len(report.estimates) == 4
    assert report.estimates[2].theoretical == Fraction(103, 128)
    assert any("1/36" in note for note in report.annotations)


def test_sweep_report_flags_tolerance(write_config):
    assert write_config(lambda d: d["toleranzen"].update(p_set=1e-9, q_set=1e-9))
    report = sweep_report("A", 1000)
    notes = [n for n in report.annotations if n.startswith("Abweichung über Toleranz")]
    flagged = [e.predicate for e in report.estimates if e.abs_deviation > 0]
    assert flagged
    assert [n.split()[3] for n in notes] == flagged


def test_sweep_report_within_tolerance(write_config):
    assert write_config(lambda d: d["toleranzen"].update(p_set=1, q_set=1))
    report = sweep_report("A", 1000)
    assert not any(n.startswith("Abweichung") for n in report.annotations)
