#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
h10.py - Kommandozeile für h10cert

Verben:
    certify      --family {A,B,C,cong} --p P --q Q [--D D] [--witness x,y] [--assume-congruent]
    sweep        --family F [--limit X] [--D D] [--csv]
    densities    [--curve LABEL]
    member       --curve LABEL --p P [--q Q --D D]
    curvedb show [--curve LABEL]
    joint-image  [--curve E1 --curve E2] [--l 2|3] [--limit X]

Exit-Codes: 0 zertifiziert / konsistent, 2 nicht zertifiziert /
inkonsistent / kein Element, 1 Fehler.

Erstellt: 18.10.2026, 22:20
"""

import argparse
import json
import sys

import config
import curve_db
import h10_certificate
from arith import ArithError
from chebotarev import (VERDICT_CONSISTENT, SieveError, in_P, in_P_gfp, in_Q_single,
                        joint_image_stat, mod2_image)
from curve_db import CurveDBError
from ec_model import CurveError
from galois_image import GaloisImageError, density_H, density_H_restricted, image_for
from h10_certificate import CertificateError
from selmer_brau import SelmerError

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2

_ERRORS = (CertificateError, SieveError, CurveDBError, CurveError, GaloisImageError,
           SelmerError, ArithError)

# =============================================================================
# Parser
# =============================================================================

def build_parser():
    parser = argparse.ArgumentParser(prog="h10",
                                     description="Unlösbarkeits-Zertifikate für H10 über Zahlringen")
    parser.add_argument("--db", help="Pfad zur Kurven-Datenbank")
    parser.add_argument("--json", action="store_true", help="Ausgabe als JSON")
    parser.add_argument("--log-level", help="TRACE, DEBUG, INFO, WARNING, ERROR")
    sub = parser.add_subparsers(dest="verb", required=True)

    certify = sub.add_parser("certify", help="Zertifikat für eine Familie")
    certify.add_argument("--family", required=True, choices=h10_certificate.FAMILIES)
    certify.add_argument("--p", type=int, required=True)
    certify.add_argument("--q", type=int, required=True)
    certify.add_argument("--D", type=int)
    certify.add_argument("--witness", help="Punkt x,y auf q y^2 = x^3 - x")
    certify.add_argument("--assume-congruent", action="store_true",
                         help="q als kongruent annehmen (Flag UNVERIFIED)")

    sweep = sub.add_parser("sweep", help="Empirische Dichten einer Familie")
    sweep.add_argument("--family", required=True, choices=h10_certificate.FAMILIES)
    sweep.add_argument("--limit", type=int)
    sweep.add_argument("--D", type=int, default=7)
    sweep.add_argument("--csv", action="store_true", help="CSV mit kumulativen Reihen")

    densities = sub.add_parser("densities", help="Dichte-Tabelle P_n")
    densities.add_argument("--curve")

    member = sub.add_parser("member", help="Zugehörigkeit zu P bzw. Q")
    member.add_argument("--curve", required=True)
    member.add_argument("--p", type=int, required=True)
    member.add_argument("--q", type=int)
    member.add_argument("--D", type=int)

    curvedb = sub.add_parser("curvedb", help="Kurven-Datenbank")
    curvedb.add_argument("action", choices=["show"])
    curvedb.add_argument("--curve")

    joint = sub.add_parser("joint-image", help="Frobenius-Statistik zweier Kurven")
    joint.add_argument("--curve", action="append")
    joint.add_argument("--l", type=int, default=3, choices=[2, 3])
    joint.add_argument("--limit", type=int, default=10 ** 4)

    return parser

# =============================================================================
# Verben
# =============================================================================

def _print_json(data):
    print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False))


def cmd_certify(args):
    cert = h10_certificate.certify(args.family, args.p, args.q, args.D,
                                   witness=args.witness, assume_congruent=args.assume_congruent)
    if args.json:
        print(cert.to_json())
    else:
        print(f"Familie {cert.family}: {cert.field_L}")
        for entry in cert.ledger:
            mark = "ok" if entry.holds else "NEIN"
            detail = f" ({entry.detail})" if entry.detail else ""
            print(f"  [{mark:>4}] {entry.name} [{entry.source}]{detail}")
        for line in cert.theorem_chain:
            print(f"  -> {line}")
        for flag in cert.flags:
            print(f"  FLAG {flag}")
        suffix = f" via {cert.certifying_curve}" if cert.certifying_curve else f": {cert.reason}"
        print(f"{cert.verdict}{suffix}")
    return EXIT_OK if cert.verdict == h10_certificate.VERDICT_INSOLUBLE else EXIT_NEGATIVE


def cmd_sweep(args):
    X = args.limit or config.get_sweep_limit()
    report = h10_certificate.sweep_report(args.family, X, args.D)
    if args.json:
        _print_json(report.to_dict())
    elif args.csv:
        print(report.to_csv(), end="")
        print()
        print(report.series_csv(), end="")
    else:
        print(report.to_csv(), end="")
        for note in report.annotations:
            print(f"# {note}")
    return EXIT_OK


def cmd_densities(args):
    if args.curve:
        rec = curve_db.get(args.curve)
        image = image_for(rec.mod3_image)
        data = {"curve": rec.label, "mod3_image": rec.mod3_image,
                "P": str(density_H(image)), "P_gfp": str(density_H_restricted(image, det=1))}
        if args.json:
            _print_json(data)
        else:
            print(f"{rec.label} ({rec.mod3_image}): P = {data['P']}, P_gfp = {data['P_gfp']}")
        return EXIT_OK

    rows = h10_certificate.emit_density_table()
    if args.json:
        _print_json([{"n": r.n, "density": str(r.value), "decimal": r.decimal,
                      "method": r.method} for r in rows])
    else:
        print("n,density,decimal,method")
        for r in rows:
            print(f"{r.n},{r.value},{r.decimal},{r.method}")
    return EXIT_OK


def cmd_member(args):
    rec = curve_db.get(args.curve)
    data = {"curve": rec.label, "p": args.p, "in_P": in_P(rec, args.p),
            "in_P_gfp": in_P_gfp(rec, args.p)}
    member = data["in_P"]
    if args.q is not None:
        if args.D is None:
            raise CertificateError("--q braucht --D")
        data["q"] = args.q
        data["D"] = args.D
        data["in_Q"] = in_Q_single(rec, -args.D, args.q)
        member = member and data["in_Q"]
    if args.json:
        _print_json(data)
    else:
        print(", ".join(f"{k}={v}" for k, v in data.items()))
    return EXIT_OK if member else EXIT_NEGATIVE


def cmd_curvedb(args):
    records = [curve_db.get(args.curve)] if args.curve else curve_db.all_records()
    if args.json:
        _print_json([r.to_dict() for r in records])
        return EXIT_OK
    for rec in records:
        print(f"{rec.label}: {rec.model}, N = {rec.conductor}, rank = {rec.rank_Q}, "
              f"mod 2: {mod2_image(rec.model)}, mod 3: {rec.mod3_image}")
    return EXIT_OK


def cmd_joint_image(args):
    labels = args.curve or list(h10_certificate.CURVES_C)
    if len(labels) != 2:
        raise CertificateError("joint-image braucht genau zwei --curve")
    E1, E2 = (curve_db.get(label) for label in labels)
    report = joint_image_stat(E1, E2, args.l, args.limit)
    if args.json:
        _print_json(report.to_dict())
    else:
        print(f"{E1.label}, {E2.label}, l = {args.l}, X = {args.limit}: {report.verdict}")
        print(f"  Primzahlen: {report.primes_used}, Paare: {len(report.observed)}/"
              f"{len(report.predicted)}, det-inkompatibel: {report.det_incompatible}")
        print(f"  Hinweis: {report.limitation}")
    return EXIT_OK if report.verdict == VERDICT_CONSISTENT else EXIT_NEGATIVE


_COMMANDS = {
    "certify": cmd_certify,
    "sweep": cmd_sweep,
    "densities": cmd_densities,
    "member": cmd_member,
    "curvedb": cmd_curvedb,
    "joint-image": cmd_joint_image
}

# =============================================================================
# Main
# =============================================================================

def main(argv=None):
    """
    Returns:
        Exit-Code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR

    if args.log_level and not config.set_log_level(args.log_level):
        logger.error(f"Unbekanntes Log-Level: {args.log_level}")
        return EXIT_ERROR

    if not config.is_valid():
        logger.error("Config ungültig!")
        for error in config.get_startup_errors():
            logger.error(f"  - {error}")
        return EXIT_ERROR

    try:
        if args.db:
            curve_db.use_db(args.db)
        return _COMMANDS[args.verb](args)
    except _ERRORS as e:
        logger.error(f"{args.verb}: {e}")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
