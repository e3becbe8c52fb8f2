#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
arith.py - Exakte Ganzzahl- und Restklassen-Arithmetik für h10cert

Primzahlsieb, Kronecker-Symbol, multiplikative Ordnung,
Fundamentaldiskriminanten, Faktorisierung, l-Potenz-Freiheit.
Rationale Zahlen sind fractions.Fraction (immer gekürzt, Nenner > 0).

Erstellt: 18.10.2026, 09:30
Modified: 18.10.2026, 10:15 - Sieb auf numpy umgestellt
Modified: 19.10.2026, 09:10 - jacobi_symbol aus sympy.functions (sympy >= 1.13)
"""

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import factorint, isprime
from sympy.functions.combinatorial.numbers import jacobi_symbol
from sympy.ntheory import n_order

import config

# Logger
logger = config.get_logger(__name__)

# Dichten und Brüche im ganzen Paket
Rational = Fraction

SIEVE_MAX = 10 ** 8
FACTOR_MAX = 2 ** 63


class ArithError(Exception):
    """Fehler im Arithmetik Modul."""
    pass

# =============================================================================
# Primzahlliste
# =============================================================================

@dataclass(frozen=True)
class PrimeList:
    """Alle Primzahlen <= limit, aufsteigend."""
    limit: int
    primes: tuple

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __contains__(self, p):
        i = bisect.bisect_left(self.primes, p)
        return i < len(self.primes) and self.primes[i] == p


def sieve_primes(limit):
    """
    Sieb des Eratosthenes.

    Args:
        limit: Obergrenze (2 <= limit <= 10^8)

    Returns:
        PrimeList mit genau den Primzahlen <= limit

    Raises:
        ArithError: limit außerhalb des Bereichs
    """
    if not isinstance(limit, int) or limit < 2 or limit > SIEVE_MAX:
        raise ArithError(f"Sieb-Limit außerhalb [2, {SIEVE_MAX}]: {limit}")

    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False

    primes = tuple(int(p) for p in np.flatnonzero(is_prime))
    logger.trace(f"sieve_primes({limit}): {len(primes)} Primzahlen")
    return PrimeList(limit=limit, primes=primes)

# =============================================================================
# Kronecker-Symbol
# =============================================================================

def kronecker(a, n):
    """
    Kronecker-Symbol (a|n) mit Standard-Fortsetzung bei 2 und n < 0.

    Raises:
        ArithError: n == 0
    """
    if n == 0:
        raise ArithError("Kronecker-Symbol für n = 0 nicht definiert")

    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result

    # Faktor 2 abspalten: (a|2) = 0 für gerades a, sonst +-1 nach a mod 8
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result

    if n == 1:
        return result
    return result * int(jacobi_symbol(a % n, n))

# =============================================================================
# Ordnung, Diskriminanten
# =============================================================================

def mult_order(a, n):
    """
    Kleinstes f >= 1 mit a^f = 1 mod n.

    Raises:
        ArithError: gcd(a, n) != 1 oder n < 2
    """
    if n < 2:
        raise ArithError(f"Modul muss >= 2 sein: {n}")
    if math.gcd(a, n) != 1:
        raise ArithError(f"gcd({a}, {n}) != 1, keine Ordnung definiert")
    return int(n_order(a % n, n))


def is_squarefree(d):
    """True wenn d != 0 quadratfrei ist."""
    if d == 0:
        return False
    return all(e == 1 for e in factorint(abs(d)).values())


def squarefree_part(n):
    """Quadratfreier Anteil mit Vorzeichen, z.B. -44 -> -11."""
    if n == 0:
        raise ArithError("Quadratfreier Anteil von 0 nicht definiert")
    result = -1 if n < 0 else 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            result *= p
    return result


def fundamental_discriminant(d):
    """
    Diskriminante von Q(sqrt(d)): d falls d = 1 mod 4, sonst 4d.

    Raises:
        ArithError: d nicht quadratfrei oder d = 1
    """
    if d == 1:
        raise ArithError("d = 1 gibt keinen quadratischen Körper")
    if not is_squarefree(d):
        raise ArithError(f"d nicht quadratfrei: {d}")
    return d if d % 4 == 1 else 4 * d


def is_fundamental_discriminant(D):
    """True wenn D Diskriminante eines quadratischen Körpers ist."""
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False

# =============================================================================
# Faktorisierung
# =============================================================================

def factor_trial(n):
    """
    Vollständige Faktorisierung, Primzahlen aufsteigend.

    Returns:
        Liste [(p, e), ...], leer für n = 1

    Raises:
        ArithError: n < 1 oder n > 2^63
    """
    if n < 1 or n > FACTOR_MAX:
        raise ArithError(f"Faktorisierung nur für 1 <= n <= 2^63: {n}")
    return sorted((int(p), int(e)) for p, e in factorint(n).items())


def prime_divisors(n):
    """Primteiler von |n| aufsteigend (leer für +-1)."""
    if n == 0:
        raise ArithError("Primteiler von 0 nicht definiert")
    return [p for p, _ in factor_trial(abs(n))]


def valuation(n, p):
    """p-adische Bewertung von n != 0."""
    if n == 0:
        raise ArithError("Bewertung von 0 ist unendlich")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_lpower_free(n, l):
    """True wenn keine Primzahl n mit Exponent >= l teilt."""
    if n < 1:
        raise ArithError(f"n muss >= 1 sein: {n}")
    return all(e < l for _, e in factor_trial(n))


def is_prime(n):
    """Primzahltest (deterministisch für den benötigten Bereich)."""
    return bool(isprime(n))


def isqrt_exact(n):
    """Ganzzahlige Wurzel oder None wenn n kein Quadrat ist."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None
