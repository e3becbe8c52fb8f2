#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
ec_model.py - Elliptische Kurven über Q für h10cert

Ganzzahlige Weierstrass-Modelle mit Invarianten, quadratische Twists,
Reduktion mod p, naive Punktzählung, Weil-Rekursion für a_v,
Parität von a_q über die 2-Teilungs-Kubik, Reduktionstyp.

Die a_p-Werte werden pro (Modell, p) in einem prozessweiten Cache gehalten.
Lesen ohne Lock, Einfügen unter Lock (idempotent).

Erstellt: 18.10.2026, 10:00
Modified: 18.10.2026, 12:20 - Punktzählung mit numpy in Blöcken
Modified: 18.10.2026, 14:10 - reduction_info mit Datenbank-Fallback für 2 und 3
"""

import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_gcd, gf_pow_mod, gf_sub

import config
from arith import kronecker, valuation, is_squarefree

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

GOOD = "Good"
SPLIT_MULT = "SplitMultiplicative"
NONSPLIT_MULT = "NonsplitMultiplicative"
ADDITIVE = "Additive"
REDUCTION_KINDS = (GOOD, SPLIT_MULT, NONSPLIT_MULT, ADDITIVE)

SOURCE_COMPUTED = "Computed"
SOURCE_DATABASE = "Database"

COUNT_MAX_P = 10 ** 7
_COUNT_BLOCK = 1 << 20


class CurveError(Exception):
    """Fehler im Kurven Modul."""
    pass

# =============================================================================
# Datentypen
# =============================================================================

@dataclass(frozen=True)
class CurveQ:
    """Ganzzahliges Weierstrass-Modell mit abgeleiteten Invarianten."""
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j_num: int
    j_den: int

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def j(self):
        return Fraction(self.j_num, self.j_den)

    def __str__(self):
        return f"[{self.a1},{self.a2},{self.a3},{self.a4},{self.a6}]"


@dataclass(frozen=True)
class ReductionInfo:
    """Reduktionsverhalten an einer Primzahl p."""
    prime: int
    kind: str
    tamagawa: object  # int oder None (= unbekannt)
    source: str

# =============================================================================
# Konstruktion
# =============================================================================

def make_curve(a1, a2, a3, a4, a6):
    """
    Erzeugt CurveQ mit allen abgeleiteten Invarianten.

    Raises:
        CurveError: singuläres Modell (Diskriminante 0)
    """
    a1, a2, a3, a4, a6 = (int(a) for a in (a1, a2, a3, a4, a6))
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    if disc == 0:
        raise CurveError(f"Singuläres Modell [{a1},{a2},{a3},{a4},{a6}]: Diskriminante 0")

    j = Fraction(c4 ** 3, disc)
    return CurveQ(a1, a2, a3, a4, a6, b2, b4, b6, b8, c4, c6, disc,
                  j.numerator, j.denominator)


def quadratic_twist(E, d):
    """
    Modell des quadratischen Twists E^(d).

    Über y^2 = x^3 + b2 x^2 + 8 b4 x + 16 b6 (isomorph zu E) wird
    y^2 = x^3 + d b2 x^2 + 8 d^2 b4 x + 16 d^3 b6 gebildet.
    Das Modell ist im Allgemeinen nicht minimal.

    Raises:
        CurveError: d nicht quadratfrei oder 0
    """
    if d == 0 or not is_squarefree(d):
        raise CurveError(f"Twist-Parameter nicht quadratfrei: {d}")
    return make_curve(0, d * E.b2, 0, 8 * d * d * E.b4, 16 * d ** 3 * E.b6)


def division_cubic(E):
    """Koeffizienten von 4x^3 + b2 x^2 + 2 b4 x + b6 (höchster Grad zuerst)."""
    return [4, E.b2, 2 * E.b4, E.b6]


def division_psi3(E):
    """Koeffizienten des 3-Teilungspolynoms 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8."""
    return [3, E.b2, 3 * E.b4, 3 * E.b6, E.b8]


def is_good(E, p):
    """True wenn das Modell bei p gute Reduktion hat."""
    return E.disc % p != 0

# =============================================================================
# Punktzählung
# =============================================================================

def _count_points_f2(E):
    """Direkte Aufzählung über F_2."""
    count = 1
    for x in range(2):
        for y in range(2):
            lhs = y * y + E.a1 * x * y + E.a3 * y
            rhs = x ** 3 + E.a2 * x * x + E.a4 * x + E.a6
            if (lhs - rhs) % 2 == 0:
                count += 1
    return count


def _count_points_odd(E, p):
    """
    Zählt Punkte über F_p, p ungerade.

    (2y + a1 x + a3)^2 = g(x) mit g = 4x^3 + b2 x^2 + 2 b4 x + b6;
    zu jedem x gibt es 1 + (g(x)|p) Punkte.
    """
    is_square = np.zeros(p, dtype=bool)
    residues = np.arange(p, dtype=np.int64)
    is_square[(residues * residues) % p] = True
    is_square[0] = False

    c3, c2, c1, c0 = (c % p for c in division_cubic(E))
    zeros = 0
    squares = 0
    for start in range(0, p, _COUNT_BLOCK):
        x = residues[start:start + _COUNT_BLOCK]
        # Horner mit Reduktion nach jedem Schritt (int64 reicht für p <= 10^7)
        g = (c3 * x + c2) % p
        g = (g * x + c1) % p
        g = (g * x + c0) % p
        zeros += int(np.count_nonzero(g == 0))
        squares += int(np.count_nonzero(is_square[g]))
    return 1 + zeros + 2 * squares


def count_points_fp(E, p):
    """
    Anzahl der Punkte von E mod p inklusive Punkt im Unendlichen.

    Raises:
        CurveError: schlechte Reduktion oder p > 10^7
    """
    if p > COUNT_MAX_P:
        raise CurveError(f"Punktzählung nur bis p <= {COUNT_MAX_P}: {p}")
    if not is_good(E, p):
        raise CurveError(f"Schlechte Reduktion von {E} bei p={p}")
    if p == 2:
        return _count_points_f2(E)
    return _count_points_odd(E, p)

# =============================================================================
# Spur von Frobenius (mit Cache)
# =============================================================================

_trace_cache = {}
_trace_lock = threading.Lock()


def trace_ap(E, p):
    """
    a_p = p + 1 - #E(F_p), gecacht pro (Modell, p).

    Raises:
        CurveError: schlechte Reduktion
    """
    key = (E.ainvs, p)
    cached = _trace_cache.get(key)
    if cached is not None:
        return cached

    a_p = p + 1 - count_points_fp(E, p)
    if a_p * a_p > 4 * p:
        raise CurveError(f"Hasse-Schranke verletzt: a_{p}={a_p} für {E}")

    with _trace_lock:
        _trace_cache.setdefault(key, a_p)
    logger.trace(f"a_{p}({E}) = {a_p}")
    return a_p


def clear_trace_cache():
    """Leert den a_p-Cache."""
    with _trace_lock:
        _trace_cache.clear()


def trace_extension(a_p, p, f):
    """
    alpha^f + beta^f über t_0 = 2, t_1 = a_p, t_k = a_p t_(k-1) - p t_(k-2).

    Raises:
        CurveError: Hasse-Schranke verletzt oder f < 1
    """
    if a_p * a_p > 4 * p:
        raise CurveError(f"Hasse-Schranke verletzt: |{a_p}| > 2*sqrt({p})")
    if f < 1:
        raise CurveError(f"f muss >= 1 sein: {f}")

    t_prev, t = 2, a_p
    for _ in range(f - 1):
        t_prev, t = t, a_p * t - p * t_prev
    return t


def count_points_extension(E, p, f):
    """#E(F_(p^f)) = p^f + 1 - t_f."""
    return p ** f + 1 - trace_extension(trace_ap(E, p), p, f)


def ap_parity(E, q):
    """
    a_q mod 2 für ungerades q mit guter Reduktion.

    a_q ist ungerade genau dann, wenn die 2-Teilungs-Kubik keine Nullstelle
    mod q hat, d.h. gcd(x^q - x, g) = 1 in F_q[x].

    Raises:
        CurveError: q gerade oder schlechte Reduktion
    """
    if q % 2 == 0:
        raise CurveError(f"ap_parity nur für ungerade q: {q}")
    if not is_good(E, q):
        raise CurveError(f"Schlechte Reduktion von {E} bei q={q}")

    g = gf_from_int_poly(division_cubic(E), q)
    x_q = gf_pow_mod([ZZ(1), ZZ(0)], q, g, q, ZZ)
    h = gf_sub(x_q, [ZZ(1), ZZ(0)], q, ZZ)
    common = gf_gcd(h, g, q, ZZ)
    return 1 if len(common) == 1 else 0

# =============================================================================
# Reduktionstyp
# =============================================================================

def reduction_info(E, p, record=None):
    """
    Reduktionstyp und Tamagawa-Zahl bei p.

    Für p >= 5 berechnet (multiplikativ: gespalten genau dann, wenn -c6
    ein Quadrat mod p ist). Additive Primstellen und p in {2, 3} nehmen
    die Tamagawa-Zahl aus dem Datenbank-Eintrag, sonst unbekannt (None).

    Args:
        E: CurveQ (als minimales Modell angenommen)
        p: Primzahl
        record: optionaler CurveRecord aus curve_db

    Raises:
        CurveError: multiplikative Reduktion bei 2 ohne Datenbank-Eintrag
    """
    if is_good(E, p):
        return ReductionInfo(p, GOOD, 1, SOURCE_COMPUTED)

    db_tamagawa = None
    db_kind = None
    if record is not None:
        db_tamagawa = record.tamagawa.get(p)
        db_kind = record.bad_reduction.get(p)

    v = valuation(E.disc, p)

    if E.c4 % p != 0:
        if p == 2:
            if db_kind is None:
                raise CurveError(f"Multiplikative Reduktion bei 2 ohne Datenbank-Eintrag: {E}")
            kind = db_kind
        else:
            kind = SPLIT_MULT if kronecker(-E.c6, p) == 1 else NONSPLIT_MULT
        if p == 2 and db_tamagawa is not None:
            return ReductionInfo(p, kind, db_tamagawa, SOURCE_DATABASE)
        tamagawa = v if kind == SPLIT_MULT else (1 if v % 2 else 2)
        return ReductionInfo(p, kind, tamagawa, SOURCE_COMPUTED)

    if db_tamagawa is not None:
        return ReductionInfo(p, ADDITIVE, db_tamagawa, SOURCE_DATABASE)

    logger.debug(f"Tamagawa-Zahl von {E} bei p={p} unbekannt (additiv, keine Datenbank)")
    return ReductionInfo(p, ADDITIVE, None, SOURCE_COMPUTED)


def hasse_bound_ok(a_p, p):
    """True wenn |a_p| <= 2 sqrt(p)."""
    return a_p * a_p <= 4 * p


def weil_bound_ok(t_f, p, f):
    """True wenn |t_f| <= 2 p^(f/2)."""
    return t_f * t_f <= 4 * p ** f

