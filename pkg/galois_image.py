#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
galois_image.py - Endliche Gruppen über Z/lZ für h10cert

Vollständige Aufzählung von GL2(F_l) (l <= 7), das CM-Bild mit 16
Elementen mod 3, die Menge H (Frobenius-Eigenwert alpha^f != 1),
exakte Dichten einzelner und gemeinsamer Bilder, Konjugationsklassen
und die theoretischen Dichten der Q-Mengen.

Alle Dichten sind exakte Brüche (fractions.Fraction).

Erstellt: 18.10.2026, 15:45
Modified: 18.10.2026, 16:30 - gemeinsame Zählung nach Determinanten-Klassen
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_pow_mod

import config
from arith import mult_order, is_prime

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

MAX_ENUM_L = 7
MAX_BRUTE_N = 3
MAX_FORMULA_N = 16

CLASS_SPLIT = "Split"
CLASS_NONSEMISIMPLE = "Nonsemisimple"
CLASS_CENTRAL = "Central"
CLASS_IRREDUCIBLE = "Irreducible"

# Q-Dichten: Art -> braucht n
Q_SPEC_KINDS = {
    "SingleK": False,
    "SingleK_plus": False,
    "SingleK_minus": False,
    "UnionK": True,
    "UnionK_plus": True,
    "UnionK_minus": True,
    "TwoCurves": False
}

# Bild mod 3 von y^2 = x^3 - x (Zeilen)
_CM16_ROWS = (
    ((1, 0), (0, 1)), ((2, 2), (0, 1)), ((1, 1), (0, 2)), ((2, 0), (2, 1)),
    ((1, 0), (1, 2)), ((2, 0), (0, 2)), ((2, 2), (2, 1)), ((1, 1), (1, 2)),
    ((2, 1), (1, 0)), ((1, 2), (2, 0)), ((0, 2), (2, 2)), ((0, 1), (1, 1)),
    ((0, 2), (1, 0)), ((0, 1), (2, 0)), ((1, 2), (2, 2)), ((2, 1), (1, 1))
)


class GaloisImageError(Exception):
    """Fehler im Galois-Bild Modul."""
    pass

# =============================================================================
# Datentypen
# =============================================================================

@dataclass(frozen=True)
class GL2Elt:
    """Invertierbare 2x2-Matrix [[a, b], [c, d]] über Z/lZ."""
    a: int
    b: int
    c: int
    d: int
    l: int

    def __post_init__(self):
        if not is_prime(self.l):
            raise GaloisImageError(f"Modul muss prim sein: {self.l}")
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, getattr(self, name) % self.l)
        if self.det == 0:
            raise GaloisImageError(f"Matrix nicht invertierbar mod {self.l}: {self.rows}")

    @property
    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    @property
    def det(self):
        return (self.a * self.d - self.b * self.c) % self.l

    @property
    def trace(self):
        return (self.a + self.d) % self.l

    def __mul__(self, other):
        if other.l != self.l:
            raise GaloisImageError(f"Verschiedene Moduln: {self.l} und {other.l}")
        return GL2Elt(self.a * other.a + self.b * other.c,
                      self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c,
                      self.c * other.b + self.d * other.d,
                      self.l)

    def inverse(self):
        inv = pow(self.det, -1, self.l)
        return GL2Elt(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv, self.l)

    @classmethod
    def from_rows(cls, rows, l):
        (a, b), (c, d) = rows
        return cls(a, b, c, d, l)

    @classmethod
    def identity(cls, l):
        return cls(1, 0, 0, 1, l)


@dataclass(frozen=True)
class ImageSubgroup:
    """Untergruppe von GL2(F_l) als explizite Elementliste."""
    l: int
    elements: tuple
    name: str = ""
    _element_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_element_set", frozenset(self.elements))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._element_set


@dataclass(frozen=True)
class ConjClass:
    """Konjugationsklasse nach Eigenwert-Typ."""
    kind: str
    params: tuple

    def __str__(self):
        return f"{self.kind}({','.join(str(x) for x in self.params)})"


@dataclass(frozen=True)
class QDensitySpec:
    """Art einer Q-Menge, z.B. UnionK_minus mit n = 3."""
    kind: str
    n: int = 0

    def __str__(self):
        return f"{self.kind}({self.n})" if Q_SPEC_KINDS.get(self.kind) else self.kind

# =============================================================================
# Gruppen
# =============================================================================

def gl2_order(l):
    """#GL2(F_l) = l (l-1)^2 (l+1)."""
    return l * (l - 1) ** 2 * (l + 1)


@lru_cache(maxsize=None)
def enumerate_gl2(l):
    """
    Alle invertierbaren 2x2-Matrizen über F_l.

    Raises:
        GaloisImageError: l nicht prim oder l > 7
    """
    if not is_prime(l) or l > MAX_ENUM_L:
        raise GaloisImageError(f"Aufzählung nur für Primzahlen l <= {MAX_ENUM_L}: {l}")

    elements = tuple(GL2Elt(a, b, c, d, l)
                     for a, b, c, d in itertools.product(range(l), repeat=4)
                     if (a * d - b * c) % l != 0)
    if len(elements) != gl2_order(l):
        raise GaloisImageError(f"GL2(F_{l}) hat {len(elements)} statt {gl2_order(l)} Elemente")
    logger.debug(f"GL2(F_{l}) aufgezählt: {len(elements)} Elemente")
    return ImageSubgroup(l=l, elements=elements, name=f"GL2(F_{l})")


def check_subgroup(image):
    """
    Prüft Einselement, Abgeschlossenheit unter Produkt und Inversion.

    Raises:
        GaloisImageError: keine Untergruppe
    """
    if GL2Elt.identity(image.l) not in image:
        raise GaloisImageError(f"{image.name}: Einselement fehlt")
    for g in image.elements:
        if g.inverse() not in image:
            raise GaloisImageError(f"{image.name}: Inverses von {g.rows} fehlt")
        for h in image.elements:
            if g * h not in image:
                raise GaloisImageError(f"{image.name}: Produkt {g.rows}*{h.rows} fehlt")


@lru_cache(maxsize=None)
def cm16_image():
    """Das Bild mod 3 der CM-Kurve y^2 = x^3 - x (16 Matrizen)."""
    image = ImageSubgroup(l=3, elements=tuple(GL2Elt.from_rows(r, 3) for r in _CM16_ROWS),
                          name="CM16")
    check_subgroup(image)
    return image


def image_for(mod3_image):
    """ImageSubgroup zum mod3_image-Feld eines Datenbank-Eintrags."""
    if mod3_image == "FullGL2":
        return enumerate_gl2(3)
    if mod3_image == "CM16":
        return cm16_image()
    raise GaloisImageError(f"Unbekanntes Bild mod 3: {mod3_image}")

# =============================================================================
# Die Menge H
# =============================================================================

def f_of(g):
    """Ordnung von det(g) in (Z/lZ)^x."""
    return mult_order(g.det, g.l)


def eigen_power_sum(g, f):
    """
    alpha^f + beta^f mod l für die Eigenwerte von g.

    x^f = A x + B modulo dem charakteristischen Polynom x^2 - t x + d,
    also alpha^f + beta^f = A t + 2 B.
    """
    l = g.l
    charpoly = [ZZ(1), ZZ((-g.trace) % l), ZZ(g.det)]
    rem = [int(c) for c in gf_pow_mod([ZZ(1), ZZ(0)], f, charpoly, l, ZZ)]
    A, B = [0] * (2 - len(rem)) + rem
    return (A * g.trace + 2 * B) % l


def in_H(g):
    """
    True wenn alpha^f(g) != 1 für einen Eigenwert alpha von g.

    Wegen alpha^f beta^f = det^f = 1 ist das gleichwertig zu
    alpha^f + beta^f != 2.

    Raises:
        GaloisImageError: l = 2
    """
    if g.l == 2:
        raise GaloisImageError("in_H nur für ungerades l")
    return eigen_power_sum(g, f_of(g)) != 2 % g.l


def density_H(image):
    """Exakter Anteil #(H geschnitten Bild) / #Bild."""
    if image.l == 2:
        raise GaloisImageError("density_H nur für ungerades l")
    hits = sum(1 for g in image.elements if in_H(g))
    return Fraction(hits, len(image))


def density_H_restricted(image, det=1):
    """
    Anteil der Elemente mit Determinante det, die in H liegen, am ganzen Bild.

    Für det = 1 ist das die Dichte der Primzahlen p = 1 mod l mit a_p != 2 mod l
    (15/48 für GL2(F_3)).
    """
    if image.l == 2:
        raise GaloisImageError("density_H_restricted nur für ungerades l")
    hits = sum(1 for g in image.elements if g.det == det % image.l and in_H(g))
    return Fraction(hits, len(image))

# =============================================================================
# Gemeinsame Bilder (Faserprodukt über det)
# =============================================================================

def _det_class_counts(image):
    """{det: (Anzahl, Anzahl nicht in H)}."""
    counts = {}
    for g in image.elements:
        total, outside = counts.get(g.det, (0, 0))
        counts[g.det] = (total + 1, outside + (0 if in_H(g) else 1))
    return counts


def joint_counts(n, l=3):
    """
    (#G, #H) durch Aufzählung aller n-Tupel aus GL2(F_l) mit gleicher
    Determinante; H = mindestens eine Koordinate in H.

    Raises:
        GaloisImageError: n außerhalb 1..3
    """
    if not 1 <= n <= MAX_BRUTE_N:
        raise GaloisImageError(f"Aufzählung nur für 1 <= n <= {MAX_BRUTE_N}: {n}")

    elements = enumerate_gl2(l).elements
    flags = [(g.det, in_H(g)) for g in elements]
    total = 0
    hits = 0
    for combo in itertools.product(flags, repeat=n):
        det = combo[0][0]
        if any(c[0] != det for c in combo):
            continue
        total += 1
        if any(c[1] for c in combo):
            hits += 1
    logger.debug(f"joint_counts(n={n}, l={l}): #G={total}, #H={hits}")
    return total, hits


def _joint_counts_by_class(n, l=3):
    """(#G, #H) über Determinanten-Klassen: Summe N^n bzw. N^n - M^n."""
    total = 0
    hits = 0
    for count, outside in _det_class_counts(enumerate_gl2(l)).values():
        total += count ** n
        hits += count ** n - outside ** n
    return total, hits


def density_P_n_formula(n):
    """
    Geschlossene Form für l = 3: (2*24^n - 12^n - 9^n) / (2*24^n).

    Raises:
        GaloisImageError: n außerhalb 1..16
    """
    if not 1 <= n <= MAX_FORMULA_N:
        raise GaloisImageError(f"n außerhalb 1..{MAX_FORMULA_N}: {n}")
    return Fraction(2 * 24 ** n - 12 ** n - 9 ** n, 2 * 24 ** n)


def density_H_joint_bruteforce(n, l=3):
    """
    Dichte der Primzahlen, die in mindestens einem von n maximal disjunkten
    P-Mengen liegen.

    n <= 3 wird aufgezählt und mit der Klassenzählung verglichen,
    n <= 16 über die Klassenzählung.

    Raises:
        GaloisImageError: n außerhalb 1..16 oder Abweichung der Verfahren
    """
    if not 1 <= n <= MAX_FORMULA_N:
        raise GaloisImageError(f"n außerhalb 1..{MAX_FORMULA_N}: {n}")

    total, hits = _joint_counts_by_class(n, l)
    density = Fraction(hits, total)
    if n <= MAX_BRUTE_N:
        brute_total, brute_hits = joint_counts(n, l)
        brute = Fraction(brute_hits, brute_total)
        if brute != density:
            raise GaloisImageError(f"Aufzählung {brute} != Klassenzählung {density} für n={n}")
    if l == 3 and density != density_P_n_formula(n):
        raise GaloisImageError(f"Klassenzählung {density} != geschlossene Form für n={n}")
    return density

# =============================================================================
# Konjugationsklassen
# =============================================================================

def _roots_mod(t, d, l):
    """Nullstellen von x^2 - t x + d in F_l, aufsteigend."""
    return sorted(x for x in range(l) if (x * x - t * x + d) % l == 0)


def classify_conjugacy(g):
    """
    Klasse nach Eigenwerten: Central(a), Nonsemisimple(a), Split(a,b), Irreducible(t,d).

    Raises:
        GaloisImageError: l = 2
    """
    l = g.l
    if l == 2:
        raise GaloisImageError("classify_conjugacy nur für ungerades l")
    if g.b == 0 and g.c == 0 and g.a == g.d:
        return ConjClass(CLASS_CENTRAL, (g.a,))

    roots = _roots_mod(g.trace, g.det, l)
    if len(roots) == 2:
        return ConjClass(CLASS_SPLIT, tuple(roots))
    if len(roots) == 1:
        return ConjClass(CLASS_NONSEMISIMPLE, (roots[0],))
    return ConjClass(CLASS_IRREDUCIBLE, (g.trace, g.det))


def class_size(cls, l):
    """Größe der Klasse in GL2(F_l)."""
    sizes = {
        CLASS_SPLIT: l * (l + 1),
        CLASS_NONSEMISIMPLE: l * l - 1,
        CLASS_CENTRAL: 1,
        CLASS_IRREDUCIBLE: l * l - l
    }
    return sizes[cls.kind]


def class_census(l):
    """{ConjClass: Anzahl} über ganz GL2(F_l)."""
    census = {}
    for g in enumerate_gl2(l).elements:
        cls = classify_conjugacy(g)
        census[cls] = census.get(cls, 0) + 1
    return census


def density_H_by_classes(l=3):
    """density_H(GL2(F_l)) über Klassenvertreter gewichtet mit Klassengröße."""
    hits = 0
    for cls, count in class_census(l).items():
        if count != class_size(cls, l):
            raise GaloisImageError(f"Klasse {cls} hat {count} statt {class_size(cls, l)} Elemente")
        rep = next(g for g in enumerate_gl2(l).elements if classify_conjugacy(g) == cls)
        if in_H(rep):
            hits += count
    return Fraction(hits, gl2_order(l))

# =============================================================================
# Q-Dichten
# =============================================================================

def parse_q_spec(text):
    """
    'UnionK_minus(3)' -> QDensitySpec('UnionK_minus', 3).

    Raises:
        GaloisImageError: unbekannte Art oder fehlendes n
    """
    text = text.strip()
    n = 0
    kind = text
    if text.endswith(")") and "(" in text:
        kind, _, rest = text[:-1].partition("(")
        try:
            n = int(rest)
        except ValueError:
            raise GaloisImageError(f"Ungültiges n in Q-Spezifikation: {text}")
    spec = QDensitySpec(kind=kind, n=n)
    _check_q_spec(spec)
    return spec


def _check_q_spec(spec):
    if spec.kind not in Q_SPEC_KINDS:
        raise GaloisImageError(f"Unbekannte Q-Spezifikation: {spec.kind}")
    if Q_SPEC_KINDS[spec.kind] and spec.n < 1:
        raise GaloisImageError(f"{spec.kind} braucht n >= 1")


def q_density_theoretical(spec):
    """
    Theoretische Dichte einer Q-Menge.

    Zerfallen in K hat Dichte 1/2, a_q ungerade (3-Zyklus im S3-Bild) 1/3,
    das Vorzeichen q = +-1 mod 4 halbiert.

    Raises:
        GaloisImageError: ungültige Spezifikation
    """
    if isinstance(spec, str):
        spec = parse_q_spec(spec)
    _check_q_spec(spec)

    if spec.kind == "SingleK":
        return Fraction(1, 6)
    if spec.kind in ("SingleK_plus", "SingleK_minus"):
        return Fraction(1, 12)
    if spec.kind == "TwoCurves":
        return Fraction(1, 36)

    union = 1 - Fraction(1, 2 ** spec.n)
    if spec.kind == "UnionK":
        return Fraction(1, 3) * union
    return Fraction(1, 6) * union


def q_density_annotation(n):
    """
    Spekulative Dichte (1/4)(1/3^n) der Q-Menge für n Kurven.
    Nur als Anmerkung in Berichten, nie für ein Urteil.
    """
    if n < 1:
        raise GaloisImageError(f"n muss >= 1 sein: {n}")
    return Fraction(1, 4 * 3 ** n)
