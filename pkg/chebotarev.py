#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
chebotarev.py - Primzahl-Mengen P und Q, Dichte-Sweeps für h10cert

Zugehörigkeit zu P(E,3) (a_v != 2 mod 3 über Q(mu_3)), zu den Q-Mengen
(q zerfällt in K, a_q ungerade, Vorzeichen mod 4), empirische Dichten
durch Sieben aller Primzahlen <= X, Bild mod 2 aus der 2-Teilungs-Kubik
und die Frobenius-Statistik als Ersatz für maximale Disjunktheit.

Sweeps zerlegen die Primzahlliste in zusammenhängende Blöcke; bei
worker > 1 laufen die Blöcke in einem ProcessPoolExecutor. Die Zählung
ist reine Addition, das Ergebnis also unabhängig von der Aufteilung.

Erstellt: 18.10.2026, 17:05
Modified: 18.10.2026, 18:20 - P_gfp, P_union und kumulative Reihen
Modified: 19.10.2026, 09:50 - p > 10^7 nicht in P, Modell im Cache-Schlüssel
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from sympy import Poly, symbols

import config
import curve_db
import sweep_cache
from arith import (ArithError, fundamental_discriminant, is_fundamental_discriminant,
                   is_prime, isqrt_exact, kronecker, mult_order, sieve_primes,
                   squarefree_part)
from ec_model import COUNT_MAX_P, ap_parity, division_cubic, trace_ap, trace_extension
from galois_image import (QDensitySpec, density_H, density_H_joint_bruteforce,
                          density_H_restricted, enumerate_gl2, image_for,
                          q_density_theoretical)

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

PRED_P_SET = "P_set"
PRED_P_GFP = "P_gfp"
PRED_P_UNION = "P_union"
PRED_Q_SINGLE = "Q_single"
PRED_Q_UNION = "Q_union"
PRED_Q_TWO_CURVES = "Q_two_curves"
PREDICATE_KINDS = (PRED_P_SET, PRED_P_GFP, PRED_P_UNION,
                   PRED_Q_SINGLE, PRED_Q_UNION, PRED_Q_TWO_CURVES)

SIGN_ANY = "any"
SIGN_PLUS = "+"
SIGN_MINUS = "-"
SIGNS = (SIGN_ANY, SIGN_PLUS, SIGN_MINUS)

MOD2_FULL_S3 = "FullS3"
MOD2_C3 = "C3"
MOD2_C2 = "C2"
MOD2_TRIVIAL = "Trivial"

VERDICT_CONSISTENT = "CONSISTENT"
VERDICT_INCONSISTENT = "INCONSISTENT"

MIN_SWEEP_X = 100
MIN_JOINT_X = 10 ** 4

JOINT_LIMITATION = ("Invariante (Spur, Determinante) mod l trennt Central(a) "
                    "nicht von Nonsemisimple(a)")


class SieveError(Exception):
    """Fehler im Sieb Modul."""
    pass

# =============================================================================
# Datentypen
# =============================================================================

@dataclass(frozen=True)
class SievePredicate:
    """Beschreibung einer Primzahl-Menge; Kurven als Datenbank-Labels."""
    kind: str
    curves: tuple
    discs: tuple = ()
    sign: str = SIGN_ANY
    l: int = 3

    def __post_init__(self):
        if self.kind not in PREDICATE_KINDS:
            raise SieveError(f"Unbekannte Prädikat-Art: {self.kind}")
        if self.l != 3:
            raise SieveError(f"Nur l = 3 unterstützt: {self.l}")
        if self.sign not in SIGNS:
            raise SieveError(f"Ungültige Vorzeichen-Bedingung: {self.sign}")
        if not self.curves:
            raise SieveError("Prädikat ohne Kurve")
        for d in self.discs:
            if d >= 0 or not is_fundamental_discriminant(d):
                raise SieveError(f"Diskriminante nicht negativ fundamental: {d}")

        expected = {PRED_P_SET: 1, PRED_P_GFP: 1, PRED_Q_SINGLE: 1,
                    PRED_Q_UNION: 1, PRED_Q_TWO_CURVES: 2}
        if self.kind in expected and len(self.curves) != expected[self.kind]:
            raise SieveError(f"{self.kind} braucht {expected[self.kind]} Kurve(n)")
        if self.kind in (PRED_Q_SINGLE, PRED_Q_TWO_CURVES) and len(self.discs) != 1:
            raise SieveError(f"{self.kind} braucht genau eine Diskriminante")
        if self.kind == PRED_Q_UNION and not self.discs:
            raise SieveError("Q_union braucht mindestens eine Diskriminante")

    @property
    def descriptor(self):
        """Stabile Textform, z.B. Q_union(557b1,[-7,-79,-127],-)."""
        curves = ",".join(self.curves)
        if self.kind in (PRED_P_SET, PRED_P_GFP, PRED_P_UNION):
            return f"{self.kind}({curves},{self.l})"
        discs = ",".join(str(d) for d in self.discs)
        if self.kind == PRED_Q_TWO_CURVES:
            return f"{self.kind}({curves},{discs})"
        if self.kind == PRED_Q_UNION:
            return f"{self.kind}({curves},[{discs}],{self.sign})"
        return f"{self.kind}({curves},{discs},{self.sign})"

    @property
    def curve_key(self):
        return "+".join(self.curves)

    @property
    def model_key(self):
        """a-Invarianten der Kurven aus der Datenbank, z.B. 0,-1,0,-11,-11+0,-1,0,-1,-7."""
        return "+".join(",".join(str(a) for a in curve_db.get(label).model.ainvs)
                        for label in self.curves)


@dataclass(frozen=True)
class DensityEstimate:
    """Ergebnis eines Sweeps bis X."""
    predicate: str
    X: int
    hits: int
    primes_scanned: int
    empirical: Fraction
    theoretical: Fraction
    abs_deviation: Fraction

    def to_dict(self):
        return {
            "predicate": self.predicate,
            "X": self.X,
            "hits": self.hits,
            "scanned": self.primes_scanned,
            "empirical": float(self.empirical),
            "theoretical": str(self.theoretical),
            "deviation": float(self.abs_deviation)
        }


@dataclass(frozen=True)
class Mod2Image:
    """Bild mod 2: FullS3, C3, C2 oder Trivial; quad_disc für FullS3 und C2."""
    kind: str
    quad_disc: object = None

    def __str__(self):
        return self.kind if self.quad_disc is None else f"{self.kind}({self.quad_disc})"


@dataclass(frozen=True)
class JointImageReport:
    """Frobenius-Statistik zweier Kurven bei l."""
    curves: tuple
    l: int
    X: int
    primes_used: int
    observed: dict
    predicted: tuple
    missing: tuple
    unexpected: tuple
    det_incompatible: int
    verdict: str
    limitation: str = JOINT_LIMITATION

    def to_dict(self):
        def fmt(pair):
            (t1, d1), (t2, d2) = pair
            return f"({t1},{d1})|({t2},{d2})"
        return {
            "curves": list(self.curves),
            "l": self.l,
            "X": self.X,
            "primes_used": self.primes_used,
            "observed": {fmt(k): v for k, v in sorted(self.observed.items())},
            "predicted": [fmt(k) for k in self.predicted],
            "missing": [fmt(k) for k in self.missing],
            "unexpected": [fmt(k) for k in self.unexpected],
            "det_incompatible": self.det_incompatible,
            "verdict": self.verdict,
            "limitation": self.limitation
        }

# =============================================================================
# Zugehörigkeit
# =============================================================================

def in_P(E, p, l=3):
    """
    p in P(E, l): p kein Teiler von N, p != l und a_v = t_f != 2 mod l
    mit f = Ordnung von p mod l.

    Primzahlen über 10^7 liegen außerhalb der Punktzählung und gelten
    als nicht enthalten.

    Args:
        E: CurveRecord
        p: Primzahl
    """
    if not is_prime(p) or p == l or E.conductor % p == 0:
        return False
    if p > COUNT_MAX_P:
        logger.warning(f"p = {p} > {COUNT_MAX_P}: Punktzählung nicht möglich")
        return False
    f = mult_order(p, l)
    a_v = trace_extension(trace_ap(E.model, p), p, f)
    return a_v % l != 2


def in_P_gfp(E, p, l=3):
    """Variante mit Restklassengrad 1: p = 1 mod l und a_p != 2 mod l."""
    return p % l == 1 and in_P(E, p, l)


def in_P_union(curves, p, l=3):
    """p liegt in mindestens einer der Mengen P(E_i, l)."""
    return any(in_P(E, p, l) for E in curves)


def _sign_ok(q, sign):
    if sign == SIGN_MINUS:
        return q % 4 == 3
    if sign == SIGN_PLUS:
        return q % 4 == 1
    return True


def in_Q_single(E, d_K, q, sign=SIGN_ANY):
    """
    q in Q(E, K): q kein Teiler von 2N, q zerfällt in K = Q(sqrt(d_K)),
    a_q ungerade, q = +-1 mod 4 je nach sign.
    """
    if not is_prime(q) or q == 2 or E.conductor % q == 0:
        return False
    if not _sign_ok(q, sign):
        return False
    if kronecker(d_K, q) != 1:
        return False
    return ap_parity(E.model, q) == 1


def in_Q_union(E, discs, q, sign=SIGN_MINUS):
    """q liegt in Q(E, K_i) für mindestens ein d_K in discs."""
    if not discs:
        raise SieveError("Leere Diskriminanten-Liste")
    return any(in_Q_single(E, d_K, q, sign) for d_K in discs)


def in_Q_two_curves(E1, E2, d_K, q):
    """q = -1 mod 4, q kein Teiler von 2 N1 N2, q zerfällt in K, a_q(E1) und a_q(E2) ungerade."""
    if not is_prime(q) or q % 4 != 3:
        return False
    if E1.conductor % q == 0 or E2.conductor % q == 0:
        return False
    if kronecker(d_K, q) != 1:
        return False
    return ap_parity(E1.model, q) == 1 and ap_parity(E2.model, q) == 1


def evaluate(pred, p, records=None):
    """
    Wertet pred an der Primzahl p aus.

    Args:
        records: Tupel der CurveRecords zu pred.curves (sonst aus curve_db)
    """
    if records is None:
        records = tuple(curve_db.get(label) for label in pred.curves)

    if pred.kind == PRED_P_SET:
        return in_P(records[0], p, pred.l)
    if pred.kind == PRED_P_GFP:
        return in_P_gfp(records[0], p, pred.l)
    if pred.kind == PRED_P_UNION:
        return in_P_union(records, p, pred.l)
    if pred.kind == PRED_Q_SINGLE:
        return in_Q_single(records[0], pred.discs[0], p, pred.sign)
    if pred.kind == PRED_Q_UNION:
        return in_Q_union(records[0], pred.discs, p, pred.sign)
    return in_Q_two_curves(records[0], records[1], pred.discs[0], p)

# =============================================================================
# Theoretische Dichten
# =============================================================================

def theoretical_density(pred):
    """
    Dichte aus dem Galois-Bild der beteiligten Kurven.

    Raises:
        SieveError: Vereinigung mit Kurven ohne volles Bild mod 3
    """
    records = [curve_db.get(label) for label in pred.curves]

    if pred.kind == PRED_P_SET:
        return density_H(image_for(records[0].mod3_image))
    if pred.kind == PRED_P_GFP:
        return density_H_restricted(image_for(records[0].mod3_image), det=1)
    if pred.kind == PRED_P_UNION:
        if len(records) == 1:
            return density_H(image_for(records[0].mod3_image))
        if any(r.mod3_image != curve_db.MOD3_FULL for r in records):
            raise SieveError("Vereinigung nur für Kurven mit vollem Bild mod 3 modelliert")
        return density_H_joint_bruteforce(len(records), pred.l)

    suffix = {SIGN_ANY: "", SIGN_PLUS: "_plus", SIGN_MINUS: "_minus"}[pred.sign]
    if pred.kind == PRED_Q_SINGLE:
        return q_density_theoretical(QDensitySpec("SingleK" + suffix))
    if pred.kind == PRED_Q_UNION:
        return q_density_theoretical(QDensitySpec("UnionK" + suffix, len(pred.discs)))
    return q_density_theoretical(QDensitySpec("TwoCurves"))

# =============================================================================
# Sweeps
# =============================================================================

def _evaluate_chunk(pred, db_path, primes):
    """Trefferliste eines Blocks (läuft auch im Worker-Prozess)."""
    curve_db.use_db(db_path)
    records = tuple(curve_db.get(label) for label in pred.curves)
    return [evaluate(pred, p, records) for p in primes]


def _check_limit(X, minimum):
    if not isinstance(X, int) or X < minimum or X > COUNT_MAX_P:
        raise SieveError(f"X außerhalb [{minimum}, {COUNT_MAX_P}]: {X}")


def hit_flags(pred, X, worker=None, chunk=None):
    """
    Alle Primzahlen <= X mit Zugehörigkeit.

    Returns:
        (primes, flags) als Listen gleicher Länge

    Raises:
        SieveError: X außerhalb des Bereichs
    """
    _check_limit(X, MIN_SWEEP_X)
    sweep_config = config.get_sweep_config()
    worker = worker or sweep_config["worker"]
    chunk = chunk or sweep_config["chunk_groesse"]

    try:
        primes = list(sieve_primes(X))
    except ArithError as e:
        raise SieveError(str(e))

    db_path = curve_db.current_path()
    chunks = [primes[i:i + chunk] for i in range(0, len(primes), chunk)]
    logger.debug(f"Sweep {pred.descriptor}: X={X}, {len(primes)} Primzahlen, "
                 f"{len(chunks)} Blöcke, {worker} Worker")

    if worker > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=worker) as executor:
            parts = list(executor.map(_evaluate_chunk, [pred] * len(chunks),
                                      [db_path] * len(chunks), chunks))
    else:
        parts = [_evaluate_chunk(pred, db_path, c) for c in chunks]

    flags = [flag for part in parts for flag in part]
    return primes, flags


def _estimate(pred, X, hits, scanned, theoretical):
    empirical = Fraction(hits, scanned)
    logger.info(f"{pred.descriptor} bis {X}: {hits}/{scanned} = {float(empirical):.4f} "
                f"(theoretisch {theoretical} = {float(theoretical):.4f})")
    return DensityEstimate(
        predicate=pred.descriptor,
        X=X,
        hits=hits,
        primes_scanned=scanned,
        empirical=empirical,
        theoretical=theoretical,
        abs_deviation=abs(empirical - theoretical)
    )


def empirical_density(pred, X, worker=None, chunk=None):
    """
    Anteil der Primzahlen <= X in der Menge, mit theoretischem Wert.

    Ergebnisse werden im Sweep-Cache abgelegt (wenn aktiv).

    Raises:
        SieveError: X außerhalb des Bereichs
    """
    _check_limit(X, MIN_SWEEP_X)
    theoretical = theoretical_density(pred)

    cached = sweep_cache.lookup(pred.curve_key, pred.model_key, pred.descriptor, X)
    if cached is not None:
        hits, scanned = cached
    else:
        primes, flags = hit_flags(pred, X, worker, chunk)
        hits = sum(flags)
        scanned = len(primes)
        sweep_cache.store(pred.curve_key, pred.model_key, pred.descriptor, X, hits, scanned)

    return _estimate(pred, X, hits, scanned, theoretical)


def _series(primes, flags, X, steps):
    checkpoints = [X * k // steps for k in range(1, steps + 1)]
    series = []
    hits = 0
    index = 0
    for x in checkpoints:
        while index < len(primes) and primes[index] <= x:
            hits += flags[index]
            index += 1
        if index:
            series.append((x, hits, index, Fraction(hits, index)))
    return series


def cumulative_density(pred, X, steps=10, worker=None, chunk=None):
    """
    Laufende empirische Dichte an den Stellen X/steps, 2X/steps, ..., X.

    Returns:
        Liste von (x, hits, scanned, Fraction)
    """
    primes, flags = hit_flags(pred, X, worker, chunk)
    return _series(primes, flags, X, steps)


def sweep_with_series(pred, X, steps=10, worker=None, chunk=None):
    """
    DensityEstimate und kumulative Reihe aus einem Durchlauf.

    Returns:
        (DensityEstimate, Liste von (x, hits, scanned, Fraction))
    """
    theoretical = theoretical_density(pred)
    primes, flags = hit_flags(pred, X, worker, chunk)
    hits = sum(flags)
    sweep_cache.store(pred.curve_key, pred.model_key, pred.descriptor, X, hits,
                      len(primes))
    return _estimate(pred, X, hits, len(primes), theoretical), _series(primes, flags, X, steps)

# =============================================================================
# Bild mod 2
# =============================================================================

_x = symbols("x")


def mod2_image(E):
    """
    Galois-Gruppe der 2-Teilungs-Kubik 4x^3 + b2 x^2 + 2 b4 x + b6.

    FullS3: irreduzibel, Diskriminante kein Quadrat; quad_disc ist die
    Fundamentaldiskriminante der Quadratklasse der Diskriminante.

    Args:
        E: CurveQ
    """
    cubic = Poly(division_cubic(E), _x)
    _, factors = cubic.factor_list()
    degrees = sorted(f.degree() for f, mult in factors for _ in range(mult))

    if degrees == [1, 1, 1]:
        return Mod2Image(MOD2_TRIVIAL)
    if degrees == [1, 2]:
        quadratic = next(f for f, _ in factors if f.degree() == 2)
        return Mod2Image(MOD2_C2, fundamental_discriminant(squarefree_part(int(quadratic.discriminant()))))

    disc = int(cubic.discriminant())
    if isqrt_exact(disc) is not None:
        return Mod2Image(MOD2_C3)
    return Mod2Image(MOD2_FULL_S3, fundamental_discriminant(squarefree_part(disc)))


def quad_subfield_discs(E1, E2):
    """
    {d1, d2, d12}: quadratische Teilkörper der Bilder mod 2 und ihres Kompositums.

    Raises:
        SieveError: ein Bild ohne quadratischen Teilkörper
    """
    d1 = mod2_image(E1).quad_disc
    d2 = mod2_image(E2).quad_disc
    if d1 is None or d2 is None:
        raise SieveError("Bild mod 2 ohne quadratischen Teilkörper")
    return {d1, d2, fundamental_discriminant(squarefree_part(d1 * d2))}

# =============================================================================
# Frobenius-Statistik zweier Kurven
# =============================================================================

def _invariants(record, l):
    """Alle (Spur, det) mod l, die das Bild von record realisiert."""
    if l == 3:
        image = image_for(record.mod3_image)
    elif record.mod2_image.get("type") == curve_db.MOD2_TRIVIAL:
        return {(0, 1)}
    else:
        image = enumerate_gl2(2)
    return {(g.trace, g.det) for g in image.elements}


def predicted_pairs(E1, E2, l):
    """Invariantenpaare des Faserprodukts über det (maximal disjunkt)."""
    inv1 = _invariants(E1, l)
    inv2 = _invariants(E2, l)
    return tuple(sorted((a, b) for a in inv1 for b in inv2 if a[1] == b[1]))


def joint_image_stat(E1, E2, l, X):
    """
    Beobachtete Paare ((a_p(E1), p), (a_p(E2), p)) mod l für p <= X mit
    guter Reduktion beider Kurven, verglichen mit dem Faserprodukt.

    CONSISTENT genau dann, wenn jedes vorhergesagte Paar auftritt und
    kein Paar mit verschiedenen Determinanten.

    Raises:
        SieveError: l nicht in {2, 3} oder X < 10^4
    """
    if l not in (2, 3):
        raise SieveError(f"joint_image_stat nur für l in (2, 3): {l}")
    _check_limit(X, MIN_JOINT_X)

    observed = Counter()
    det_incompatible = 0
    used = 0
    for p in sieve_primes(X):
        if p == l or E1.conductor % p == 0 or E2.conductor % p == 0:
            continue
        inv1 = (trace_ap(E1.model, p) % l, p % l)
        inv2 = (trace_ap(E2.model, p) % l, p % l)
        if inv1[1] != inv2[1]:
            det_incompatible += 1
        observed[(inv1, inv2)] += 1
        used += 1

    predicted = predicted_pairs(E1, E2, l)
    missing = tuple(pair for pair in predicted if pair not in observed)
    unexpected = tuple(sorted(pair for pair in observed if pair not in set(predicted)))
    consistent = not missing and det_incompatible == 0
    verdict = VERDICT_CONSISTENT if consistent else VERDICT_INCONSISTENT

    logger.info(f"joint_image_stat({E1.label}, {E2.label}, l={l}, X={X}): {verdict}, "
                f"{len(observed)}/{len(predicted)} Paare, {len(missing)} fehlen")
    return JointImageReport(
        curves=(E1.label, E2.label),
        l=l,
        X=X,
        primes_used=used,
        observed=dict(observed),
        predicted=predicted,
        missing=missing,
        unexpected=unexpected,
        det_incompatible=det_incompatible,
        verdict=verdict
    )
