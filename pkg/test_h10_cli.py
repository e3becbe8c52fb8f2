#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
test_h10_cli.py - Tests für h10.py (Verben und Exit-Codes)

Erstellt: 19.10.2026, 01:05
"""

import json

import pytest

import h10
from h10 import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out

# =============================================================================
# certify
# =============================================================================

def test_certify_family_A(capsys):
    code, out = _run(capsys, "certify", "--family", "A", "--p", "2", "--q", "43")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "Insoluble via 557b1"
    assert "Q(2^(1/3), sqrt(-43))" in out


def test_certify_not_certified(capsys):
    code, out = _run(capsys, "certify", "--family", "A", "--p", "557", "--q", "43")
    assert code == EXIT_NEGATIVE
    last = out.strip().splitlines()[-1]
    assert last.startswith("NotCertified: ")
    assert "teilt N" in last


def test_certify_large_p_not_certified(capsys):
    code, out = _run(capsys, "certify", "--family", "A", "--p", "10000019", "--q", "43")
    assert code == EXIT_NEGATIVE
    assert "Punktzählung nicht möglich" in out


def test_certify_json(capsys):
    code, out = _run(capsys, "--json", "certify", "--family", "C", "--p", "5", "--q", "71",
                     "--D", "7")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["verdict"] == "Insoluble"
    assert data["certifying_curve"] == "1472j1"
    assert data["inputs"] == {"D": 7, "p": 5, "q": 71}


def test_certify_congruent_assertion(capsys):
    code, out = _run(capsys, "certify", "--family", "cong", "--p", "5", "--q", "3",
                     "--assume-congruent")
    assert code == EXIT_OK
    assert "FLAG UNVERIFIED" in out


def test_certify_congruent_witness(capsys):
    code, _ = _run(capsys, "certify", "--family", "cong", "--p", "5", "--q", "5",
                   "--witness", "-4/5,6/25")
    assert code == EXIT_OK
    code, _ = _run(capsys, "certify", "--family", "cong", "--p", "5", "--q", "5",
                   "--witness", "1,1")
    assert code == EXIT_ERROR


@pytest.mark.parametrize("argv", [
    ["certify", "--family", "B", "--p", "5", "--q", "23", "--D", "11"],
    ["certify", "--family", "B", "--p", "5", "--q", "23"],
    ["certify", "--family", "A", "--p", "4", "--q", "43"],
    ["certify", "--family", "X", "--p", "5", "--q", "23"],
    ["certify", "--family", "A", "--p", "zwei", "--q", "43"],
    ["unbekannt"],
    [],
])
def test_certify_errors(capsys, argv):
    assert main(argv) == EXIT_ERROR

# =============================================================================
# Weitere Verben
# =============================================================================

def test_densities_table(capsys):
    code, out = _run(capsys, "densities")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,density,decimal,method"
    assert lines[1] == "1,9/16,0.5625,Aufzählung"
    assert lines[2].startswith("2,103/128,0.8046875,")
    assert len(lines) == 8


def test_densities_curve(capsys):
    code, out = _run(capsys, "--json", "densities", "--curve", "32a2")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["P"] == "11/16"
    assert data["mod3_image"] == "CM16"


def test_member(capsys):
    assert _run(capsys, "member", "--curve", "704g1", "--p", "5")[0] == EXIT_OK
    assert _run(capsys, "member", "--curve", "704g1", "--p", "13")[0] == EXIT_NEGATIVE
    code, out = _run(capsys, "--json", "member", "--curve", "704g1", "--p", "5",
                     "--q", "23", "--D", "7")
    assert code == EXIT_OK
    assert json.loads(out)["in_Q"] is True
    assert _run(capsys, "member", "--curve", "704g1", "--p", "5", "--q", "23")[0] == EXIT_ERROR
    assert _run(capsys, "member", "--curve", "11a1", "--p", "5")[0] == EXIT_ERROR


def test_curvedb_show(capsys):
    code, out = _run(capsys, "curvedb", "show")
    assert code == EXIT_OK
    assert [line.split(":")[0] for line in out.strip().splitlines()] == [
        "1472j1", "32a2", "557b1", "704g1"]
    code, out = _run(capsys, "--json", "curvedb", "show", "--curve", "557b1")
    assert json.loads(out)[0]["conductor"] == 557


def test_sweep_csv(capsys):
    code, out = _run(capsys, "sweep", "--family", "cong", "--limit", "1000", "--csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "predicate,X,hits,scanned,empirical,theoretical,deviation"
    assert lines[1].startswith("P_set(32a2,3),1000,")
    assert "predicate,x,hits,scanned,empirical" in lines


def test_sweep_limit_error(capsys):
    assert main(["sweep", "--family", "A", "--limit", "10"]) == EXIT_ERROR


def test_joint_image(capsys):
    code, out = _run(capsys, "joint-image", "--l", "2")
    assert code == EXIT_OK
    assert "CONSISTENT" in out
    assert main(["joint-image", "--curve", "704g1"]) == EXIT_ERROR

# =============================================================================
# Globale Optionen
# =============================================================================

def test_invalid_log_level():
    assert main(["--log-level", "LAUT", "densities"]) == EXIT_ERROR


@pytest.mark.parametrize("level", ["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"])
def test_documented_log_levels(level):
    assert main(["--log-level", level, "densities"]) == EXIT_OK


def test_missing_db(tmp_path):
    assert main(["--db", str(tmp_path / "fehlt.json"), "curvedb", "show"]) == EXIT_ERROR


def test_invalid_config(write_config):
    assert not write_config(lambda data: data.pop("sweep"))
    assert main(["densities"]) == EXIT_ERROR


def test_help_exits_ok(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "certify" in capsys.readouterr().out


def test_parser_families():
    args = h10.build_parser().parse_args(["certify", "--family", "cong", "--p", "5", "--q", "5"])
    assert args.D is None
    assert not args.assume_congruent
