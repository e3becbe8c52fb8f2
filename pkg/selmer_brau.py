#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
selmer_brau.py - Lokale Terme delta_v und Rang-Stabilitäts-Zertifikat für h10cert

Für k = Q(mu_3) und die Kummer-Schicht k_a = k(a^(1/3)) wird die Dimension
des Galois-invarianten Teils der 3-Selmer-Gruppe als Summe lokaler Terme
delta_v über die Stellen in S berechnet. S besteht aus den Stellen über
den Primteilern von 3 N a und der archimedischen Stelle (delta = 0 für
ungerades l).

Stellen über derselben rationalen Primzahl r sind konjugiert: delta wird
einmal berechnet und mit der Anzahl der Stellen von k über r gewichtet
(2 für r = 1 mod 3, sonst 1).

Erstellt: 18.10.2026, 18:40
Modified: 18.10.2026, 20:10 - Torsions-Prämisse, Quercheck mit in_P
"""

import json
from dataclasses import dataclass, field

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (gf_add, gf_factor_sqf, gf_from_int_poly, gf_gcd,
                                     gf_mul, gf_pow_mod, gf_rem, gf_sub)

import config
from arith import (is_lpower_free, kronecker, mult_order, prime_divisors, valuation)
from ec_model import (ADDITIVE, SPLIT_MULT, count_points_extension,
                      count_points_fp, division_cubic, division_psi3, is_good,
                      reduction_info, trace_ap)
from chebotarev import in_P

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

RAMIFIED = "Ramified"
INERT = "Inert"
SPLIT = "Split"

GOOD_ORDINARY_ABOVE_L = "GoodOrdinaryAboveL"
GOOD_SUPERSINGULAR_ABOVE_L = "GoodSupersingularAboveL"
GOOD_AWAY_FROM_L = "GoodAwayFromL"
PLACE_SPLIT_MULT = "SplitMult"
PLACE_NONSPLIT_MULT = "NonsplitMult"
PLACE_ADDITIVE = "Additive"
GOOD_PLACE_KINDS = (GOOD_ORDINARY_ABOVE_L, GOOD_SUPERSINGULAR_ABOVE_L, GOOD_AWAY_FROM_L)

# delta_v, das die Tabelle nur als "1 oder 2" angibt
DELTA_ONE_OR_TWO = "1|2"
# additive Stelle mit l | c_v: keine Aussage
DELTA_UNRESOLVED = "?"

SOURCE_DATABASE = "Database"
SOURCE_COMPUTED = "Computed"
SOURCE_BOTH = "Database+Computed"

VERDICT_VANISHES = "SelmerVanishes"
VERDICT_INCONCLUSIVE = "Inconclusive"

CERT_SCHEMA_VERSION = 1


class SelmerError(Exception):
    """Fehler im Selmer/Brau Modul."""
    pass

# =============================================================================
# Datentypen
# =============================================================================

@dataclass(frozen=True)
class PlaceData:
    """Die Stellen von Q(mu_l) über r, zusammengefasst."""
    r: int
    f_v: int
    q_v: int
    splitting: str
    reduction: str
    tamagawa: object
    residual_torsion_dim: object
    places: int = 1
    l: int = 3
    a: int = 0

    def __post_init__(self):
        if self.r != self.l and self.q_v % self.l != 1:
            raise SelmerError(f"q_v = {self.q_v} nicht 1 mod {self.l} bei r = {self.r}")
        if self.splitting == RAMIFIED and self.a and (self.l * self.a) % self.r != 0:
            raise SelmerError(f"r = {self.r} verzweigt, teilt aber nicht {self.l}*{self.a}")

    def to_dict(self):
        return {
            "r": self.r,
            "f_v": self.f_v,
            "q_v": self.q_v,
            "splitting": self.splitting,
            "reduction": self.reduction,
            "tamagawa": self.tamagawa,
            "residual_torsion_dim": self.residual_torsion_dim,
            "places": self.places
        }


@dataclass(frozen=True)
class Premise:
    """Eine Voraussetzung des Zertifikats."""
    name: str
    source: str
    holds: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "source": self.source, "holds": self.holds,
                "detail": self.detail}


@dataclass(frozen=True)
class PlaceRow:
    """Zeile der Stellen-Tabelle: Daten, delta_v pro Stelle, gewichtetes delta."""
    data: PlaceData
    delta: object
    weighted: object

    def to_dict(self):
        row = self.data.to_dict()
        row["delta_v"] = self.delta
        row["delta_weighted"] = self.weighted
        return row


@dataclass(frozen=True)
class StabilityCertificate:
    """Rang-Stabilität von E über Q(mu_l, a^(1/l))."""
    label: str
    a: int
    l: int
    places: tuple
    premises: tuple
    total: object
    verdict: str
    reason: str = ""
    archimedean_delta: int = 0
    cross_check: bool = True
    notes: tuple = field(default_factory=tuple)

    def first_failing_premise(self):
        return next((p.name for p in self.premises if not p.holds), None)

    def to_dict(self):
        return {
            "schema_version": CERT_SCHEMA_VERSION,
            "curve": self.label,
            "a": self.a,
            "l": self.l,
            "premises": [p.to_dict() for p in self.premises],
            "places": [row.to_dict() for row in self.places],
            "archimedean_delta": self.archimedean_delta,
            "total": self.total,
            "cross_check": self.cross_check,
            "verdict": self.verdict,
            "reason": self.reason,
            "notes": list(self.notes)
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

# =============================================================================
# Zerlegung in der Kummer-Schicht
# =============================================================================

def _check_a(a, l):
    if a <= 1:
        raise SelmerError(f"a muss > 1 sein: {a}")
    if not is_lpower_free(a, l):
        raise SelmerError(f"a = {a} ist nicht {l}-potenzfrei")


def splitting_in_kummer(r, a, l=3):
    """
    Verhalten der Stellen von Q(mu_l) über r in Q(mu_l, a^(1/l)).

    r teilt a: verzweigt. r = l: verzweigt wenn l | a oder a keine l-te
    Potenz in Z_l ist (für l = 3: a != +-1 mod 9), sonst zerlegt.
    Sonst zerlegt genau dann, wenn a^((r^f - 1)/l) = 1 in F_(r^f),
    f = Ordnung von r mod l; da a in F_r liegt, reicht Rechnen mod r.

    Raises:
        SelmerError: a <= 1 oder nicht l-potenzfrei
    """
    _check_a(a, l)

    if a % r == 0:
        return RAMIFIED
    if r == l:
        if l != 3:
            raise SelmerError(f"Stelle über l nur für l = 3 modelliert: {l}")
        return SPLIT if a % 9 in (1, 8) else RAMIFIED

    f = mult_order(r, l)
    exponent = (r ** f - 1) // l
    return SPLIT if pow(a, exponent, r) == 1 else INERT

# =============================================================================
# u_(r,a)
# =============================================================================

def u_r_a(E, r, a):
    """
    u = d^n (A/B)^s mod r mit j = r^(-n) A/B, n = -ord_r(j) > 0,
    s = ord_r(a), d = a / r^s.

    Raises:
        SelmerError: keine multiplikative Reduktion bei r oder n <= 0
    """
    if is_good(E, r) or E.c4 % r == 0:
        raise SelmerError(f"Keine multiplikative Reduktion von {E} bei r = {r}")

    j = E.j
    n = valuation(j.denominator, r) - (valuation(j.numerator, r) if j.numerator else 0)
    if n <= 0:
        raise SelmerError(f"ord_{r}(j) = {-n} ist nicht negativ")

    A = j.numerator
    B = j.denominator // r ** n
    s = valuation(a, r)
    d = a // r ** s
    ratio = A * pow(B, -1, r) % r
    return pow(d, n, r) * pow(ratio, s, r) % r

# =============================================================================
# Rest-Torsion
# =============================================================================

def _zz(coeffs, r):
    return gf_from_int_poly([int(c) for c in coeffs], r)


def _points_over_root_odd(E, r, f, modulus=None, c=None):
    """
    Punkte mit x = x0 für ungerades r über F_(r^f); (2y + a1 x + a3)^2 = g(x).

    x0 = c in F_r, oder x0 = t in F_r[t]/modulus (irreduzibel quadratisch).
    """
    g = _zz(division_cubic(E), r)
    if modulus is None:
        z = sum(coef * pow(c, k, r) for k, coef in enumerate(reversed(division_cubic(E)))) % r
        if z == 0:
            return 1
        if f % 2 == 0:
            return 2
        return 1 + kronecker(z, r)

    z = gf_rem(g, modulus, r, ZZ)
    if not z:
        return 1
    q = r ** f
    power = gf_pow_mod(z, (q - 1) // 2, modulus, r, ZZ)
    return 2 if [int(x) for x in power] == [1] else 0


def _points_over_root_char2(E, f, modulus=None, c=None):
    """
    Punkte mit x = x0 über F_(2^f): y^2 + h y = k mit h = a1 x0 + a3.
    h = 0: genau ein y. Sonst lösbar genau dann, wenn Spur(k/h^2) = 0.
    """
    r = 2
    q = r ** f
    if modulus is None:
        h = (E.a1 * c + E.a3) % 2
        k = (c ** 3 + E.a2 * c * c + E.a4 * c + E.a6) % 2
        if h == 0:
            return 1
        # k in F_2: Spur nach F_2 ist f * k
        return 2 if (f * k) % 2 == 0 else 0

    h = gf_rem(_zz([E.a1, E.a3], r), modulus, r, ZZ)
    if not h:
        return 1
    k = gf_rem(_zz([1, E.a2, E.a4, E.a6], r), modulus, r, ZZ)
    h_inv = gf_pow_mod(h, q - 2, modulus, r, ZZ)
    w = gf_rem(gf_mul(k, gf_mul(h_inv, h_inv, r, ZZ), r, ZZ), modulus, r, ZZ)
    trace = []
    power = w
    for _ in range(f):
        trace = gf_add(trace, power, r, ZZ)
        power = gf_rem(gf_mul(power, power, r, ZZ), modulus, r, ZZ)
    return 2 if not trace else 0


def residual_torsion_dim(E, r, f):
    """
    dim_F3 von E(F_(r^f))[3] für r != 3 mit guter Reduktion, f in (1, 2).

    Zählt die Nullstellen x0 des 3-Teilungspolynoms in F_(r^f) und die
    zugehörigen y; #E[3](F_(r^f)) ist 1, 3 oder 9.

    Raises:
        SelmerError: r = 3, schlechte Reduktion, f > 2 oder inkonsistente Zählung
    """
    if r == 3:
        raise SelmerError("residual_torsion_dim nur für r != 3")
    if not is_good(E, r):
        raise SelmerError(f"Schlechte Reduktion von {E} bei r = {r}")
    if f not in (1, 2):
        raise SelmerError(f"Restklassengrad {f} nicht unterstützt")

    if count_points_extension(E, r, f) % 3 != 0:
        return 0

    q = r ** f
    psi = _zz(division_psi3(E), r)
    x = [ZZ(1), ZZ(0)]
    x_q = gf_pow_mod(x, q, psi, r, ZZ)
    roots_poly = gf_gcd(gf_sub(x_q, x, r, ZZ), psi, r, ZZ)

    points = 0
    if len(roots_poly) > 1:
        _, factors = gf_factor_sqf(roots_poly, r, ZZ)
        for factor in factors:
            degree = len(factor) - 1
            if degree == 1:
                c = int(-factor[1]) % r
                if r == 2:
                    points += _points_over_root_char2(E, f, c=c)
                else:
                    points += _points_over_root_odd(E, r, f, c=c)
            else:
                # zwei konjugierte Nullstellen mit gleicher Punktzahl
                if r == 2:
                    points += 2 * _points_over_root_char2(E, f, modulus=factor)
                else:
                    points += 2 * _points_over_root_odd(E, r, f, modulus=factor)

    n3 = 1 + points
    dims = {1: 0, 3: 1, 9: 2}
    if n3 not in dims:
        raise SelmerError(f"#E(F_{q})[3] = {n3} für {E} ist unmöglich")
    logger.trace(f"E(F_{q})[3] für {E}: {n3} Punkte")
    return dims[n3]

# =============================================================================
# Stellen-Daten und delta_v
# =============================================================================

def places_above(r, l=3):
    """Anzahl der Stellen von Q(mu_l) über r."""
    if r == l:
        return 1
    f = mult_order(r, l)
    return (l - 1) // f


def place_data(rec, r, a, l=3):
    """
    PlaceData der Stellen über r für den Datenbank-Eintrag rec.

    Raises:
        SelmerError: a ungültig
    """
    E = rec.model
    f = 1 if r == l else mult_order(r, l)
    q_v = r ** f
    splitting = splitting_in_kummer(r, a, l)

    if is_good(E, r):
        if r == l:
            reduction = GOOD_ORDINARY_ABOVE_L if trace_ap(E, r) % l != 0 else GOOD_SUPERSINGULAR_ABOVE_L
            # #E(F_3) <= 7: 3 | #E heißt genau eine Untergruppe der Ordnung 3
            residual = 0 if count_points_fp(E, r) % l != 0 else 1
        else:
            reduction = GOOD_AWAY_FROM_L
            residual = residual_torsion_dim(E, r, f)
        tamagawa = 1
    else:
        info = reduction_info(E, r, rec)
        if info.kind == ADDITIVE:
            reduction = PLACE_ADDITIVE
            tamagawa = rec.tamagawa_qmu3.get(r)
        else:
            split_over_k = info.kind == SPLIT_MULT or f % 2 == 0
            reduction = PLACE_SPLIT_MULT if split_over_k else PLACE_NONSPLIT_MULT
            e = 2 if r == l else 1
            v = valuation(E.disc, r) * e
            tamagawa = v if split_over_k else (1 if v % 2 else 2)
            db_value = rec.tamagawa_qmu3.get(r)
            if db_value is not None and db_value != tamagawa:
                logger.warning(f"{rec.label}: c_v bei {r} berechnet {tamagawa}, Datenbank {db_value}")
        residual = None

    return PlaceData(r=r, f_v=f, q_v=q_v, splitting=splitting, reduction=reduction,
                     tamagawa=tamagawa, residual_torsion_dim=residual,
                     places=places_above(r, l), l=l, a=a)


def delta_v(pd, a, E, l=3):
    """
    Lokaler Term delta_v nach Reduktionstyp und Zerlegung in k_a/k.

    Returns:
        int, DELTA_ONE_OR_TWO (gewöhnlich über l mit Rest-Torsion) oder
        DELTA_UNRESOLVED (additiv mit l | c_v)

    Raises:
        SelmerError: additive Stelle mit r | l a oder unbekanntes c_v
    """
    ramified = pd.splitting == RAMIFIED

    if pd.reduction in GOOD_PLACE_KINDS:
        if not ramified:
            return 0
        if pd.reduction == GOOD_ORDINARY_ABOVE_L:
            return DELTA_ONE_OR_TWO if pd.residual_torsion_dim else 0
        if pd.reduction == GOOD_SUPERSINGULAR_ABOVE_L:
            return l - 2 if a % l == 0 else 0
        return pd.residual_torsion_dim

    if pd.reduction == PLACE_SPLIT_MULT:
        if ramified:
            u = u_r_a(E, pd.r, a)
            return 1 if pow(u, (pd.q_v - 1) // l, pd.r) == 1 else 0
        if pd.splitting == INERT:
            return 1 if pd.tamagawa % l == 0 else 0
        return 0

    if pd.reduction == PLACE_NONSPLIT_MULT:
        return 0

    if (l * a) % pd.r == 0:
        raise SelmerError(f"Additive Stelle r = {pd.r} teilt {l}*{a}")
    if pd.tamagawa is None:
        raise SelmerError(f"Tamagawa-Zahl bei additivem r = {pd.r} unbekannt")
    if pd.tamagawa % l != 0:
        return 0
    return DELTA_UNRESOLVED

# =============================================================================
# Zertifikat
# =============================================================================

def tamagawa_product_qmu3(rec, l=3):
    """Tam(E/Q(mu_l)) aus den Datenbank-Werten, je Stelle über r ein Faktor."""
    product = 1
    for r, c in rec.tamagawa_qmu3.items():
        product *= c ** places_above(r, l)
    return product


def _premises(rec, a, l):
    """Prämissen in fester Reihenfolge."""
    E = rec.model
    good_at_l = is_good(E, l)
    premises = [Premise("gute Reduktion bei l", SOURCE_COMPUTED, good_at_l,
                        f"{l} teilt N = {rec.conductor} nicht" if good_at_l else f"{l} | N")]

    premises.append(Premise("Sel_l(E/Q(mu_l)) = 0", SOURCE_DATABASE,
                            rec.selmer3_over_Qmu3_vanishes,
                            rec.provenance.get("selmer3_over_Qmu3_vanishes", "")))

    tam = tamagawa_product_qmu3(rec, l)
    if good_at_l:
        n_l = count_points_fp(E, l)
        premises.append(Premise("l teilt nicht Tam(E/Q(mu_l)) * #E(F_l)", SOURCE_BOTH,
                                (tam * n_l) % l != 0, f"Tam = {tam}, #E(F_{l}) = {n_l}"))
    else:
        premises.append(Premise("l teilt nicht Tam(E/Q(mu_l)) * #E(F_l)", SOURCE_BOTH,
                                False, "schlechte Reduktion bei l"))

    outside = [r for r in prime_divisors(a) if not in_P(rec, r, l)] if a > 1 else []
    premises.append(Premise("Primteiler von a in P(E,l)", SOURCE_COMPUTED, not outside,
                            f"nicht in P: {outside}" if outside else f"a = {a}"))

    lpower_free = is_lpower_free(a, l)
    premises.append(Premise("a ist l-potenzfrei", SOURCE_COMPUTED, lpower_free, f"a = {a}"))

    premises.append(Premise("E(Q(mu_l))[l] = 0", SOURCE_DATABASE,
                            rec.three_torsion_over_Qmu3_trivial,
                            rec.provenance.get("three_torsion_over_Qmu3_trivial", "")))
    return premises


def rank_stability_certificate(rec, a, l=3):
    """
    Zertifikat für Sel_l(E/Q(mu_l, a^(1/l))) = 0.

    SelmerVanishes genau dann, wenn alle Prämissen gelten und die Summe
    der delta_v über S gleich 0 ist; sonst Inconclusive mit Grund.

    Raises:
        SelmerError: a <= 1
    """
    if a <= 1:
        raise SelmerError(f"a muss > 1 sein: {a}")

    premises = _premises(rec, a, l)
    rows = []
    notes = []
    total = None
    cross_check = True

    if is_lpower_free(a, l):
        total = 0
        for r in prime_divisors(l * rec.conductor * a):
            pd = place_data(rec, r, a, l)
            try:
                delta = delta_v(pd, a, rec.model, l)
            except SelmerError as e:
                notes.append(str(e))
                delta = DELTA_UNRESOLVED

            # verzweigte gute Stellen über p in P haben keine Rest-Torsion
            if (pd.reduction == GOOD_AWAY_FROM_L and pd.splitting == RAMIFIED
                    and in_P(rec, r, l) and pd.residual_torsion_dim != 0):
                cross_check = False
                notes.append(f"Quercheck verletzt bei r = {r}: Rest-Torsion {pd.residual_torsion_dim}")

            if isinstance(delta, int):
                weighted = delta * pd.places
                if total is not None:
                    total += weighted
            else:
                weighted = delta
                total = None
            rows.append(PlaceRow(data=pd, delta=delta, weighted=weighted))

    failing = next((p.name for p in premises if not p.holds), None)
    if failing is not None:
        verdict, reason = VERDICT_INCONCLUSIVE, failing
    elif not cross_check:
        verdict, reason = VERDICT_INCONCLUSIVE, "Quercheck Rest-Torsion"
    elif total != 0:
        verdict, reason = VERDICT_INCONCLUSIVE, f"Summe delta_v = {total}"
    else:
        verdict, reason = VERDICT_VANISHES, ""

    logger.debug(f"Stabilitäts-Zertifikat {rec.label}, a={a}: {verdict} {reason}")
    return StabilityCertificate(label=rec.label, a=a, l=l, places=tuple(rows),
                                premises=tuple(premises), total=total, verdict=verdict,
                                reason=reason, cross_check=cross_check, notes=tuple(notes))


def recheck(cert, rec):
    """True wenn eine Neuberechnung dasselbe Zertifikat liefert."""
    return rank_stability_certificate(rec, cert.a, cert.l).to_dict() == cert.to_dict()
