"""Direct construction of Mignotte sequences.

Given an increasing, pairwise coprime seed ``q_1 < ... < q_n`` (n >= 3), let
``P`` be the product of all pairwise differences ``q_j - q_i``.  The shifted
sequence ``t*P + q_1, ..., t*P + q_n`` is then a (k, n)-Mignotte sequence for
every ``1 < k < n`` and every ``t >= 1``.

The module also carries checkers for the intermediate inequalities that make
the construction work, so they can be exercised independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .numtheory import first_common_factor_pair, product, to_rational

# 2.7182818285 > e, so E_NUM**n / E_DEN**n over-approximates e**n
E_NUM = 27182818285
E_DEN = 10**10


@dataclass(frozen=True)
class SeedSequence:
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        _check_seed(self.q)

    @property
    def n(self) -> int:
        return len(self.q)

    def __iter__(self):
        return iter(self.q)

    def __len__(self):
        return len(self.q)


@dataclass(frozen=True)
class MignotteModuli:
    m: tuple[int, ...]
    seed: SeedSequence
    P: int
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        expected = tuple(self.t * self.P + qi for qi in self.seed.q)
        if self.m != expected:
            raise ValueError("moduli do not match provenance t*P + q_i")

    @property
    def n(self) -> int:
        return len(self.m)

    def __iter__(self):
        return iter(self.m)

    def __len__(self):
        return len(self.m)


@dataclass(frozen=True)
class Bounds:
    """Threshold products for a given ``k``.

    ``M`` is the product of the ``k`` smallest moduli and ``N`` the product of
    the ``k - 1`` largest.  ``gap_ratio`` is ``(M - N) / N`` as an exact
    fraction.
    """

    k: int
    M: int
    N: int
    gap_ratio: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "gap_ratio", to_rational(self.M - self.N, self.N))


ModuliLike = Union[MignotteModuli, Sequence[int]]


def _as_list(m: ModuliLike) -> list[int]:
    if isinstance(m, MignotteModuli):
        return list(m.m)
    return [int(x) for x in m]


def _check_seed(q: Sequence[int]) -> None:
    if len(q) < 3:
        raise ValueError("sequence too short: need n >= 3")
    if any(x < 1 for x in q):
        raise ValueError("seed terms must be positive")
    if any(a >= b for a, b in zip(q, q[1:])):
        raise ValueError("not increasing")
    bad = first_common_factor_pair(q)
    if bad is not None:
        raise ValueError(f"not coprime: ({bad[0]},{bad[1]})")


def sylvester_seed(q1: int, n: int) -> SeedSequence:
    """Seed from the recursion ``q_{k+1} = 1 + q_1 * ... * q_k``.

    >>> sylvester_seed(2, 4).q
    (2, 3, 7, 43)
    """
    if n < 3:
        raise ValueError("sequence too short: need n >= 3")
    if q1 < 1:
        raise ValueError("q1 must be positive")
    q = [q1]
    running = q1
    while len(q) < n:
        q.append(running + 1)
        running *= q[-1]
    return SeedSequence(tuple(q))


def validate_seed(q: Sequence[int]) -> SeedSequence:
    return q if isinstance(q, SeedSequence) else SeedSequence(tuple(q))


def compute_P(q: SeedSequence | Sequence[int]) -> int:
    """Product of all pairwise differences ``q_j - q_i`` with ``i < j``."""
    q = validate_seed(q).q
    return product(b - a for a, b in combinations(q, 2))


def construct(q: SeedSequence | Sequence[int], t: int = 1) -> MignotteModuli:
    if t < 1:
        raise ValueError("iteration count must be positive")
    seed = validate_seed(q)
    P = compute_P(seed)
    return MignotteModuli(tuple(t * P + qi for qi in seed.q), seed, P, t)


def _check_k(k: int, n: int) -> None:
    if not 1 < k < n:
        raise ValueError(f"k must satisfy 1 < k < n (got k={k}, n={n})")


def bounds(m: ModuliLike, k: int) -> Bounds:
    ms = _as_list(m)
    n = len(ms)
    _check_k(k, n)
    return Bounds(k, product(ms[:k]), product(ms[n - k + 1:]))


def is_mignotte(m: ModuliLike, k: int) -> bool:
    """True iff the ``k`` smallest moduli outweigh the ``k - 1`` largest.

    The sequence must already be increasing and pairwise coprime; violations
    raise ``ValueError`` naming the broken precondition.
    """
    ms = _as_list(m)
    if any(a >= b for a, b in zip(ms, ms[1:])):
        raise ValueError("not increasing")
    if any(x < 1 for x in ms):
        raise ValueError("moduli must be positive")
    bad = first_common_factor_pair(ms)
    if bad is not None:
        raise ValueError(f"not coprime: ({bad[0]},{bad[1]})")
    _check_k(k, len(ms))
    b = bounds(ms, k)
    return b.M > b.N


def check_strong_n3(q: SeedSequence | Sequence[int], P: int) -> bool:
    """``(P + q_1)**2 > P + q_3`` for a three-term seed."""
    q = validate_seed(q).q
    if len(q) != 3:
        raise ValueError("check_strong_n3 needs n = 3")
    return (P + q[0]) ** 2 > P + q[2]


def check_strong_general(q: SeedSequence | Sequence[int], P: int, k: int) -> bool:
    """``P**(1/k) * (1 + q_1/P) > 1 + q_n/P`` for n >= 4.

    Evaluated in the equivalent integer form ``P*(P+q_1)**k > (P+q_n)**k``
    (multiply through by ``P**k`` and raise to the k-th power).
    """
    q = validate_seed(q).q
    n = len(q)
    if n < 4:
        raise ValueError("use n=3 checker")
    _check_k(k, n)
    if P < 1:
        raise ValueError("P must be positive")
    return P * (P + q[0]) ** k > (P + q[-1]) ** k


def superfactorial_bound(n: int) -> int:
    """``1! * 2! * ... * (n-1)!``, a lower bound on P for any n-term seed."""
    if n < 3:
        raise ValueError("superfactorial_bound needs n >= 3")
    return product(math.factorial(i) for i in range(1, n))


def exceeds_e_power(x: int, n: int) -> bool:
    """Exact test of ``x > e**n`` using the rational over-approximation of e."""
    return x * E_DEN**n > E_NUM**n


def e_power_floor(n: int) -> int:
    """``floor(E**n)`` where ``E = 2.7182818285`` over-approximates e."""
    return E_NUM**n // E_DEN**n


def reapply(moduli: MignotteModuli) -> MignotteModuli:
    """Run the construction once more, using the moduli as the new seed."""
    return construct(SeedSequence(moduli.m), 1)
