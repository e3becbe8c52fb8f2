#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
h10_certificate.py - Unlösbarkeits-Zertifikate für H10 über Zahlringen

Vier Familien L = F K mit F = Q(p^(1/3)):
    A:    K = Q(sqrt(-q)),  Kurve 557b1
    B:    K = Q(sqrt(D q)), Kurve 704g1, D aus der Menge D
    C:    K = Q(sqrt(D q)), Kurven 704g1 und 1472j1, D in (7, 615)
    cong: K = Q(sqrt(q)),   Kurve 32a2, q kongruente Zahl

Ein Zertifikat prüft die arithmetischen Voraussetzungen (rank E(F) = 0
über das Stabilitäts-Zertifikat, rank E(K) > 0 über Rangsprung bzw.
Zeugen-Punkt) und führt die Schlusskette als zitierte Prosa.
Insoluble nur, wenn jeder Eintrag im Ledger erfüllt ist; sonst
NotCertified mit dem ersten verletzten Eintrag in Ledger-Reihenfolge.

Erstellt: 18.10.2026, 20:30
Modified: 18.10.2026, 22:05 - Zeugen-Suche für kongruente Zahlen, Sweep-Report mit Reihen
Modified: 19.10.2026, 09:30 - Toleranzprüfung im Sweep-Report, p > 10^7 als NotCertified
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

import config
import curve_db
from arith import is_prime, isqrt_exact, kronecker
from chebotarev import (SIGN_MINUS, SievePredicate, in_P, in_Q_single, in_Q_two_curves,
                        sweep_with_series, PRED_P_SET, PRED_P_GFP, PRED_P_UNION,
                        PRED_Q_SINGLE, PRED_Q_UNION, PRED_Q_TWO_CURVES)
from ec_model import COUNT_MAX_P, ap_parity
from galois_image import (MAX_BRUTE_N, density_H_joint_bruteforce, density_P_n_formula,
                          q_density_annotation)
from selmer_brau import VERDICT_VANISHES, rank_stability_certificate

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

FAMILY_A = "A"
FAMILY_B = "B"
FAMILY_C = "C"
FAMILY_CONG = "cong"
FAMILIES = (FAMILY_A, FAMILY_B, FAMILY_C, FAMILY_CONG)

CURVE_A = "557b1"
DISCS_A = (-7, -79, -127)
CURVE_B = "704g1"
CURVES_C = ("704g1", "1472j1")
D_SET_C = (7, 615)
CURVE_CONG = "32a2"

VERDICT_INSOLUBLE = "Insoluble"
VERDICT_NOT_CERTIFIED = "NotCertified"

SOURCE_COMPUTED = "Computed"
SOURCE_DATABASE = "Database"
SOURCE_THEOREM = "Theorem"
SOURCE_ASSERTION = "Assertion"

FLAG_UNVERIFIED = "UNVERIFIED"

H10_SCHEMA_VERSION = 1

DENSITY_TABLE_ROWS = 7
SWEEP_MIN_X = 100
CSV_HEADER = ("predicate", "X", "hits", "scanned", "empirical", "theoretical", "deviation")

# Schlusskette, zitiert, nicht berechnet
_CHAIN_STABILITY = ("Rang-Stabilität: Sel_3(E/Q(mu_3, p^(1/3))) = 0 liefert "
                    "rank E(Q(p^(1/3))) = rank E(Q) = 0")
_CHAIN_DIOPHANTINE = ("rank E(F) = 0 und rank E(K) > 0 für quadratisches K: "
                      "O_F ist diophantisch in O_L, L = F K")
_CHAIN_ONE_COMPLEX = "Z ist diophantisch in O_F, da F = Q(p^(1/3)) genau eine komplexe Stelle hat"
_CHAIN_TRANSITIVE = ("Transitivität: Z diophantisch in O_L, also ist H10 für O_L unlösbar "
                     "(Unlösbarkeit über Z)")
_CHAIN_RANK_JUMP_HEEGNER = ("Rangsprung: Twist mit Heegner-Hypothese und (*) hat Rang genau 1 "
                            "(c_2 ungerade, Bild mod 2 voll)")
_CHAIN_CONGRUENT = "q kongruent genau dann, wenn q y^2 = x^3 - x positiven Rang hat"

CONGRUENT_PROSE = ("Kongruenz von q wird nicht analytisch entschieden (bekannte Anteile wie "
                   "mindestens 62,9 % bzw. genau 1/2 der Primzahlen q = 5, 7 mod 8 gehen "
                   "in kein Urteil ein); Zertifikat nur über Zeugen-Punkt, Suche oder Zusicherung")


class CertificateError(Exception):
    """Fehler im Zertifikats Modul."""
    pass

# =============================================================================
# Datentypen
# =============================================================================

@dataclass(frozen=True)
class LedgerEntry:
    """Eine Voraussetzung mit Quelle und Wert."""
    name: str
    source: str
    holds: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "source": self.source, "holds": self.holds,
                "detail": self.detail}


@dataclass(frozen=True)
class H10Certificate:
    """Unlösbarkeits-Zertifikat für den Ganzheitsring von L."""
    family: str
    inputs: dict
    field_L: str
    curves: tuple
    certifying_curve: object
    ledger: tuple
    theorem_chain: tuple
    verdict: str
    reason: str = ""
    flags: tuple = ()
    stability: dict = field(default_factory=dict)
    notes: tuple = ()

    def to_dict(self):
        return {
            "schema_version": H10_SCHEMA_VERSION,
            "family": self.family,
            "inputs": dict(self.inputs),
            "field": self.field_L,
            "curves": list(self.curves),
            "certifying_curve": self.certifying_curve,
            "ledger": [e.to_dict() for e in self.ledger],
            "theorem_chain": list(self.theorem_chain),
            "verdict": self.verdict,
            "reason": self.reason,
            "flags": list(self.flags),
            "stability": {label: cert for label, cert in sorted(self.stability.items())},
            "notes": list(self.notes)
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)


@dataclass(frozen=True)
class CongruentWitness:
    """Rationaler Punkt (x, y) auf q y^2 = x^3 - x mit y != 0."""
    q: int
    x: Fraction
    y: Fraction

    def verify(self):
        return self.y != 0 and self.q * self.y ** 2 == self.x ** 3 - self.x

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class DensityRow:
    n: int
    value: Fraction
    decimal: str
    method: str


@dataclass(frozen=True)
class SweepReport:
    """Sweep-Ergebnisse einer Familie mit kumulativen Reihen."""
    family: str
    X: int
    estimates: tuple
    series: dict
    annotations: tuple = ()

    def to_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for e in self.estimates:
            writer.writerow([e.predicate, e.X, e.hits, e.primes_scanned,
                             f"{float(e.empirical):.6f}", str(e.theoretical),
                             f"{float(e.abs_deviation):.6f}"])
        return buffer.getvalue()

    def series_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("predicate", "x", "hits", "scanned", "empirical"))
        for descriptor, points in sorted(self.series.items()):
            for x, hits, scanned, value in points:
                writer.writerow([descriptor, x, hits, scanned, f"{float(value):.6f}"])
        return buffer.getvalue()

    def to_dict(self):
        return {
            "family": self.family,
            "X": self.X,
            "rows": [e.to_dict() for e in self.estimates],
            "series": {d: [[x, h, s, float(v)] for x, h, s, v in points]
                       for d, points in sorted(self.series.items())},
            "annotations": list(self.annotations)
        }

# =============================================================================
# Hilfsfunktionen
# =============================================================================

def _check_primes(p, q):
    for name, value in (("p", p), ("q", q)):
        if not isinstance(value, int) or not is_prime(value):
            raise CertificateError(f"{name} ist keine Primzahl: {value}")


def _p_detail(rec, p, l=3):
    if p == l:
        return f"p = {l} ist ausgeschlossen"
    if rec.conductor % p == 0:
        return f"p = {p} teilt N = {rec.conductor}"
    if p > COUNT_MAX_P:
        return f"p = {p} > 10^7: Punktzählung nicht möglich"
    return f"a_v({rec.label}) = 2 mod {l}"


def _q_detail(records, d_K, q, sign):
    """Erste verletzte Bedingung für q in einer Q-Menge."""
    if q == 2 or any(r.conductor % q == 0 for r in records):
        return f"q = {q} teilt 2N"
    if sign == SIGN_MINUS and q % 4 != 3:
        return f"q = {q} ist nicht -1 mod 4"
    if kronecker(d_K, q) != 1:
        return f"q = {q} zerfällt nicht in Q(sqrt({d_K}))"
    even = [r.label for r in records if ap_parity(r.model, q) == 0]
    return f"a_q gerade für {', '.join(even)}"


def _stability_entries(rec, p):
    """
    Ledger-Einträge für p in P(E,3) und Sel_3 = 0 über Q(mu_3, p^(1/3)).

    Returns:
        (Einträge, Zertifikat-Dict oder None, gilt)
    """
    member = in_P(rec, p)
    entries = [LedgerEntry(f"p in P({rec.label},3)", SOURCE_COMPUTED, member,
                           "" if member else _p_detail(rec, p))]
    if not member:
        entries.append(LedgerEntry(f"Sel_3({rec.label}) = 0 über Q(mu_3, p^(1/3))",
                                   SOURCE_COMPUTED, False, "nicht geprüft"))
        return entries, None, False

    cert = rank_stability_certificate(rec, p)
    vanishes = cert.verdict == VERDICT_VANISHES
    entries.append(LedgerEntry(f"Sel_3({rec.label}) = 0 über Q(mu_3, p^(1/3))",
                               SOURCE_COMPUTED, vanishes,
                               f"Summe delta_v = {cert.total}" if vanishes else cert.reason))
    return entries, cert.to_dict(), vanishes


def _database_entries(rec, d_K):
    """Datenbank-Fakten für den Rangsprung mit K = Q(sqrt(d_K))."""
    entries = [
        LedgerEntry(f"rank {rec.label}(Q) = 0", SOURCE_DATABASE, rec.rank_Q == 0,
                    rec.provenance.get("rank_Q", "")),
        LedgerEntry(f"c_2({rec.label}) ungerade", SOURCE_DATABASE, rec.c2_odd),
        LedgerEntry(f"Bild mod 2 von {rec.label} voll", SOURCE_DATABASE,
                    rec.mod2_image.get("type") == curve_db.MOD2_FULL),
        LedgerEntry(f"Hypothese (*) für {rec.label} und d_K = {d_K}", SOURCE_DATABASE,
                    d_K in rec.star_discriminants,
                    rec.provenance.get("star_discriminants", ""))
    ]
    return entries


def _rank_sum_entry(label, d):
    return LedgerEntry(f"rank {label}(Q(sqrt({d}))) = rank {label}(Q) + rank {label}^({d})(Q)",
                       SOURCE_THEOREM, True, f"Twist mit d = {d}")


def _finish(family, inputs, field_L, curves, certifying, ledger, chain,
            flags=(), stability=None, notes=()):
    failing = next((e for e in ledger if not e.holds), None)
    if failing is None:
        verdict, reason = VERDICT_INSOLUBLE, ""
    else:
        verdict = VERDICT_NOT_CERTIFIED
        reason = failing.name if not failing.detail else f"{failing.name}: {failing.detail}"
    logger.info(f"Familie {family} {inputs}: {verdict} {reason}")
    return H10Certificate(family=family, inputs=inputs, field_L=field_L, curves=tuple(curves),
                          certifying_curve=certifying if verdict == VERDICT_INSOLUBLE else None,
                          ledger=tuple(ledger), theorem_chain=tuple(chain), verdict=verdict,
                          reason=reason, flags=tuple(flags), stability=stability or {},
                          notes=tuple(notes))

# =============================================================================
# Familien
# =============================================================================

def certify_family_A(p, q):
    """
    L = Q(p^(1/3), sqrt(-q)) mit 557b1: p in P, q in der Vereinigung der
    Q^-(557b1, K) für K = Q(sqrt(-7)), Q(sqrt(-79)), Q(sqrt(-127)).

    Raises:
        CertificateError: p oder q nicht prim
    """
    _check_primes(p, q)
    rec = curve_db.get(CURVE_A)

    ledger, cert, _ = _stability_entries(rec, p)
    stability = {rec.label: cert} if cert else {}

    hit = next((d for d in DISCS_A if in_Q_single(rec, d, q, SIGN_MINUS)), None)
    if hit is None:
        if q == 2 or rec.conductor % q == 0 or q % 4 != 3:
            detail = _q_detail([rec], DISCS_A[0], q, SIGN_MINUS)
        else:
            detail = f"q = {q} liegt in keiner der drei Q-Mengen"
        ledger.append(LedgerEntry(f"q in Q^-({rec.label}, {list(DISCS_A)})", SOURCE_COMPUTED,
                                  False, detail))
        d_K = DISCS_A[0]
    else:
        ledger.append(LedgerEntry(f"q in Q^-({rec.label}, {list(DISCS_A)})", SOURCE_COMPUTED,
                                  True, f"zerfällt in Q(sqrt({hit})), a_q ungerade"))
        d_K = hit

    ledger.extend(_database_entries(rec, d_K))
    ledger.append(LedgerEntry(f"Delta({rec.label}) > 0, Twist-Parameter < 0", SOURCE_DATABASE,
                              rec.disc_sign == "+", f"d = {-q}"))
    ledger.append(_rank_sum_entry(rec.label, -q))

    chain = (_CHAIN_STABILITY, _CHAIN_RANK_JUMP_HEEGNER, _CHAIN_DIOPHANTINE,
             _CHAIN_ONE_COMPLEX, _CHAIN_TRANSITIVE)
    return _finish(FAMILY_A, {"p": p, "q": q}, f"Q({p}^(1/3), sqrt({-q}))", (rec.label,),
                   rec.label, ledger, chain, stability=stability)


def certify_family_B(p, q, D):
    """
    L = Q(p^(1/3), sqrt(D q)) mit 704g1: p in P, q in Q^-(704g1, Q(sqrt(-D))).

    Raises:
        CertificateError: p oder q nicht prim, D nicht in der Menge D
    """
    _check_primes(p, q)
    if D not in curve_db.get_d_set():
        raise CertificateError(f"D = {D} liegt nicht in der Menge D")
    rec = curve_db.get(CURVE_B)
    d_K = -D

    ledger, cert, _ = _stability_entries(rec, p)
    stability = {rec.label: cert} if cert else {}

    member = in_Q_single(rec, d_K, q, SIGN_MINUS)
    ledger.append(LedgerEntry(f"q in Q^-({rec.label}, Q(sqrt({d_K})))", SOURCE_COMPUTED, member,
                              "" if member else _q_detail([rec], d_K, q, SIGN_MINUS)))
    ledger.append(LedgerEntry(f"D = {D} in der Menge D", SOURCE_DATABASE, True))
    ledger.extend(_database_entries(rec, d_K))
    ledger.append(LedgerEntry(f"Delta({rec.label}) < 0", SOURCE_DATABASE, rec.disc_sign == "-",
                              f"Twist mit d d_K = {D * q}"))
    ledger.append(_rank_sum_entry(rec.label, D * q))

    chain = (_CHAIN_STABILITY, _CHAIN_RANK_JUMP_HEEGNER, _CHAIN_DIOPHANTINE,
             _CHAIN_ONE_COMPLEX, _CHAIN_TRANSITIVE)
    return _finish(FAMILY_B, {"p": p, "q": q, "D": D}, f"Q({p}^(1/3), sqrt({D * q}))",
                   (rec.label,), rec.label, ledger, chain, stability=stability)


def certify_family_C(p, q, D):
    """
    L = Q(p^(1/3), sqrt(D q)) mit 704g1 und 1472j1: p in P einer der beiden
    Kurven mit Sel_3 = 0, q in Q(704g1, 1472j1, Q(sqrt(-D))).
    Qualifizieren beide Kurven, zertifiziert das lexikographisch kleinere Label.

    Raises:
        CertificateError: p oder q nicht prim, D nicht in (7, 615)
    """
    _check_primes(p, q)
    if D not in D_SET_C:
        raise CertificateError(f"D = {D} nicht in {D_SET_C}")
    records = [curve_db.get(label) for label in CURVES_C]
    d_K = -D

    stability = {}
    qualifying = []
    details = []
    for rec in records:
        entries, cert, ok = _stability_entries(rec, p)
        if cert:
            stability[rec.label] = cert
        if ok:
            qualifying.append(rec.label)
        else:
            failed = next(e for e in entries if not e.holds)
            details.append(f"{rec.label}: {failed.detail or failed.name}")

    certifying = min(qualifying) if qualifying else None
    ledger = [LedgerEntry("p in P und Sel_3 = 0 für 704g1 oder 1472j1", SOURCE_COMPUTED,
                          certifying is not None,
                          f"zertifiziert durch {certifying}" if certifying else "; ".join(details))]

    member = in_Q_two_curves(records[0], records[1], d_K, q)
    ledger.append(LedgerEntry(f"q in Q(704g1, 1472j1, Q(sqrt({d_K})))", SOURCE_COMPUTED, member,
                              "" if member else _q_detail(records, d_K, q, SIGN_MINUS)))
    for rec in records:
        ledger.extend(_database_entries(rec, d_K))
        ledger.append(LedgerEntry(f"Delta({rec.label}) < 0", SOURCE_DATABASE,
                                  rec.disc_sign == "-"))
    ledger.append(_rank_sum_entry(certifying or records[0].label, D * q))

    chain = (_CHAIN_STABILITY + " (für mindestens eine der beiden Kurven)",
             _CHAIN_RANK_JUMP_HEEGNER, _CHAIN_DIOPHANTINE, _CHAIN_ONE_COMPLEX, _CHAIN_TRANSITIVE)
    return _finish(FAMILY_C, {"p": p, "q": q, "D": D}, f"Q({p}^(1/3), sqrt({D * q}))",
                   CURVES_C, certifying, ledger, chain, stability=stability)

# =============================================================================
# Kongruente Zahlen
# =============================================================================

def find_congruent_witness(q, max_zaehler=None, max_nenner=None):
    """
    Naive Suche nach einem Punkt auf Y^2 = X^3 - q^2 X mit X = a/d^2, Y != 0:
    b^2 = a (a^2 - q^2 d^4) für |a| <= max_zaehler, 1 <= d <= max_nenner.
    Rückgabe als Punkt (x, y) = (X/q, Y/q^2) auf q y^2 = x^3 - x.

    Returns:
        CongruentWitness oder None (Suche erschöpft)
    """
    limits = config.get_kongruent_config()
    max_zaehler = max_zaehler or limits["max_zaehler"]
    max_nenner = max_nenner or limits["max_nenner"]

    for d in range(1, max_nenner + 1):
        q2d4 = q * q * d ** 4
        for a in range(-max_zaehler, max_zaehler + 1):
            if a == 0 or math.gcd(a, d) != 1:
                continue
            value = a * (a * a - q2d4)
            if value <= 0:
                continue
            b = isqrt_exact(value)
            if b is None:
                continue
            X = Fraction(a, d * d)
            Y = Fraction(b, d ** 3)
            witness = CongruentWitness(q=q, x=X / q, y=Y / (q * q))
            logger.debug(f"Zeuge für q={q}: X={X}, Y={Y}")
            return witness

    logger.debug(f"Keine Zeugen für q={q} mit |a| <= {max_zaehler}, d <= {max_nenner}")
    return None


def parse_witness(text, q):
    """
    'x,y' mit Brüchen, z.B. '-4/5,6/25'.

    Raises:
        CertificateError: Format ungültig
    """
    parts = [s.strip() for s in str(text).split(",")]
    if len(parts) != 2:
        raise CertificateError(f"Zeugen-Punkt muss 'x,y' sein: {text}")
    try:
        x, y = (Fraction(s) for s in parts)
    except (ValueError, ZeroDivisionError):
        raise CertificateError(f"Zeugen-Punkt keine rationalen Zahlen: {text}")
    return CongruentWitness(q=q, x=x, y=y)


def certify_family_cong(p, q, witness=None, assume_congruent=False):
    """
    L = Q(p^(1/3), sqrt(q)) mit 32a2: p in P(32a2,3) mit Sel_3 = 0 und q
    kongruent, belegt durch Zeugen-Punkt (geprüft), naive Suche oder
    Zusicherung (Flag UNVERIFIED).

    Args:
        witness: CongruentWitness, 'x,y' oder None

    Raises:
        CertificateError: p oder q nicht prim, Zeuge fehlerhaft
    """
    _check_primes(p, q)
    rec = curve_db.get(CURVE_CONG)

    ledger, cert, _ = _stability_entries(rec, p)
    stability = {rec.label: cert} if cert else {}
    flags = []
    notes = [CONGRUENT_PROSE]

    if witness is not None:
        if not isinstance(witness, CongruentWitness):
            witness = parse_witness(witness, q)
        if not witness.verify():
            raise CertificateError(f"Punkt {witness} liegt nicht auf {q} y^2 = x^3 - x oder y = 0")
        ledger.append(LedgerEntry(f"q = {q} kongruent", SOURCE_COMPUTED, True,
                                  f"Zeuge {witness} geprüft"))
    elif assume_congruent:
        flags.append(FLAG_UNVERIFIED)
        ledger.append(LedgerEntry(f"q = {q} kongruent", SOURCE_ASSERTION, True,
                                  "Zusicherung, nicht geprüft"))
    else:
        found = find_congruent_witness(q)
        if found is not None:
            ledger.append(LedgerEntry(f"q = {q} kongruent", SOURCE_COMPUTED, True,
                                      f"Zeuge {found} durch Suche"))
        else:
            limits = config.get_kongruent_config()
            ledger.append(LedgerEntry(f"q = {q} kongruent", SOURCE_COMPUTED, False,
                                      f"Suche erschöpft (|a| <= {limits['max_zaehler']}, "
                                      f"d <= {limits['max_nenner']}), kein Beweis"))

    ledger.append(LedgerEntry(f"rank {rec.label}(Q) = 0", SOURCE_DATABASE, rec.rank_Q == 0,
                              rec.provenance.get("rank_Q", "")))
    ledger.append(_rank_sum_entry(rec.label, q))

    chain = (_CHAIN_STABILITY, _CHAIN_CONGRUENT, _CHAIN_DIOPHANTINE,
             _CHAIN_ONE_COMPLEX, _CHAIN_TRANSITIVE)
    return _finish(FAMILY_CONG, {"p": p, "q": q}, f"Q({p}^(1/3), sqrt({q}))", (rec.label,),
                   rec.label, ledger, chain, flags=flags, stability=stability, notes=notes)


def certify(family, p, q, D=None, witness=None, assume_congruent=False):
    """
    Dispatcher für alle Familien.

    Raises:
        CertificateError: unbekannte Familie oder fehlendes D
    """
    if family == FAMILY_A:
        return certify_family_A(p, q)
    if family in (FAMILY_B, FAMILY_C):
        if D is None:
            raise CertificateError(f"Familie {family} braucht D")
        return certify_family_B(p, q, D) if family == FAMILY_B else certify_family_C(p, q, D)
    if family == FAMILY_CONG:
        return certify_family_cong(p, q, witness, assume_congruent)
    raise CertificateError(f"Unbekannte Familie: {family}")


def reverify(cert, witness=None, assume_congruent=False):
    """True wenn eine Neuberechnung aus den Eingaben dasselbe Zertifikat liefert."""
    inputs = cert.inputs
    again = certify(cert.family, inputs["p"], inputs["q"], inputs.get("D"), witness,
                    assume_congruent or FLAG_UNVERIFIED in cert.flags)
    return again.to_json() == cert.to_json()

# =============================================================================
# Dichte-Tabelle und Sweep-Report
# =============================================================================

def _decimal(value, digits=30):
    """Dezimaldarstellung, exakt für Zweierpotenz-Nenner."""
    with localcontext() as ctx:
        ctx.prec = digits
        text = str(Decimal(value.numerator) / Decimal(value.denominator))
    return text


def emit_density_table():
    """
    Dichten von P_n (mindestens eine von n maximal disjunkten Kurven) für n = 1..7.

    n <= 3 durch Aufzählung, sonst geschlossene Form; beide werden verglichen.

    Returns:
        Liste von DensityRow
    """
    rows = []
    for n in range(1, DENSITY_TABLE_ROWS + 1):
        formula = density_P_n_formula(n)
        value = density_H_joint_bruteforce(n)
        if value != formula:
            raise CertificateError(f"Tabelle n={n}: {value} != {formula}")
        method = "Aufzählung" if n <= MAX_BRUTE_N else "Formel"
        rows.append(DensityRow(n=n, value=value, decimal=_decimal(value), method=method))
    return rows


def family_predicates(family, D=7):
    """Sweep-Prädikate einer Familie."""
    if family == FAMILY_A:
        return [SievePredicate(PRED_P_SET, (CURVE_A,)),
                SievePredicate(PRED_P_GFP, (CURVE_A,)),
                SievePredicate(PRED_Q_UNION, (CURVE_A,), DISCS_A, SIGN_MINUS)]
    if family == FAMILY_B:
        return [SievePredicate(PRED_P_SET, (CURVE_B,)),
                SievePredicate(PRED_Q_SINGLE, (CURVE_B,), (-D,), SIGN_MINUS)]
    if family == FAMILY_C:
        return [SievePredicate(PRED_P_SET, (CURVES_C[0],)),
                SievePredicate(PRED_P_SET, (CURVES_C[1],)),
                SievePredicate(PRED_P_UNION, CURVES_C),
                SievePredicate(PRED_Q_TWO_CURVES, CURVES_C, (-D,))]
    if family == FAMILY_CONG:
        return [SievePredicate(PRED_P_SET, (CURVE_CONG,))]
    raise CertificateError(f"Unbekannte Familie: {family}")


def _tolerance_for(pred):
    toleranzen = config.get_toleranzen()
    key = "p_set" if pred.kind.startswith("P_") else "q_set"
    return Fraction(str(toleranzen[key]))


def _exceeds_tolerance(pred, estimate):
    return estimate.abs_deviation > _tolerance_for(pred)


def _tolerance_note(pred, estimate):
    note = (f"Abweichung über Toleranz: {estimate.predicate} "
            f"{float(estimate.abs_deviation):.6f} > {float(_tolerance_for(pred))}")
    logger.warning(note)
    return note


def sweep_report(family, X, D=7, steps=10):
    """
    Empirische gegen theoretische Dichten aller Prädikate einer Familie.

    Abweichungen über config.toleranzen (p_set für P-, q_set für Q-Prädikate)
    erscheinen als Anmerkung.

    Raises:
        CertificateError: X außerhalb [100, max_limit]
    """
    max_limit = config.get_max_limit()
    if not isinstance(X, int) or X < SWEEP_MIN_X or X > max_limit:
        raise CertificateError(f"X außerhalb [{SWEEP_MIN_X}, {max_limit}]: {X}")

    predicates = family_predicates(family, D)
    estimates = []
    series = {}
    for pred in predicates:
        estimate, points = sweep_with_series(pred, X, steps)
        estimates.append(estimate)
        series[pred.descriptor] = points

    annotations = [_tolerance_note(pred, estimate)
                   for pred, estimate in zip(predicates, estimates)
                   if _exceeds_tolerance(pred, estimate)]
    if family == FAMILY_C:
        annotations.append(f"Spekulative Q-Dichte für 2 Kurven: {q_density_annotation(2)}")
    if family == FAMILY_CONG:
        annotations.append(CONGRUENT_PROSE)
    return SweepReport(family=family, X=X, estimates=tuple(estimates), series=series,
                       annotations=tuple(annotations))
