"""Exact integer primitives: gcd, pairwise coprimality, CRT and rationals.

Everything here works on Python ints (arbitrary precision) and
:class:`fractions.Fraction`; no floating point is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


@dataclass(frozen=True)
class ResiduePair:
    """The congruence ``x = residue (mod modulus)``."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("gcd expects non-negative integers")
    if a == 0 and b == 0:
        raise ValueError("undefined gcd")
    return math.gcd(a, b)


def first_common_factor_pair(xs: Sequence[int]) -> tuple[int, int] | None:
    """Return the first pair ``(xs[i], xs[j])``, i < j, sharing a factor."""
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if gcd(xs[i], xs[j]) != 1:
                return xs[i], xs[j]
    return None


def pairwise_coprime(xs: Sequence[int]) -> bool:
    if len(xs) == 0:
        raise ValueError("empty sequence")
    if any(x < 1 for x in xs):
        raise ValueError("pairwise_coprime expects positive integers")
    return first_common_factor_pair(xs) is None


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # iterative: recursion depth would grow with the bit length
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def crt_combine(pairs: Iterable[ResiduePair]) -> ResiduePair:
    """Fold congruences pairwise into a single one modulo the product.

    Raises ``ValueError("moduli not coprime")`` at the first pair whose
    modulus shares a factor with the running product.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("crt_combine needs at least one congruence")
    x, m = pairs[0].residue, pairs[0].modulus
    for p in pairs[1:]:
        g, u, _ = _egcd(m, p.modulus)
        if g != 1:
            raise ValueError("moduli not coprime")
        # x + m*u*(r - x) is x mod m and r mod p.modulus since m*u = 1 (mod p.modulus)
        new_m = m * p.modulus
        x = (x + m * ((u * (p.residue - x)) % p.modulus)) % new_m
        m = new_m
    return ResiduePair(x, m)


def to_rational(num: int, den: int) -> Fraction:
    if den == 0:
        raise ValueError("zero denominator")
    if den < 0:
        raise ValueError("denominator must be positive")
    return Fraction(num, den)


def product(xs: Iterable[int]) -> int:
    return math.prod(xs)


def bit_length(x: int) -> int:
    """Highest set bit position plus one; ``bit_length(0) == 0``."""
    return x.bit_length()
