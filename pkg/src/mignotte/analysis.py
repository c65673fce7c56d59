"""Growth tables for the construction, written as CSV.

``p_growth_table`` tracks how the difference product P of Sylvester seeds
outruns its superfactorial lower bound; ``gap_table`` tracks how close the
gap ratio ``(M - N) / N`` comes to ``t*P + q_1 - 1`` as ``t`` grows.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .construction import (
    SeedSequence,
    bounds,
    compute_P,
    construct,
    e_power_floor,
    superfactorial_bound,
    sylvester_seed,
    validate_seed,
)
from .numtheory import bit_length

MAX_GROWTH_N = 16

GROWTH_HEADER = ["n", "q1", "P_bits", "superfactorial_bits", "e_n_bits"]
GAP_HEADER = [
    "t",
    "gap_ratio_num",
    "gap_ratio_den",
    "predicted",
    "relative_error_num",
    "relative_error_den",
]


@dataclass(frozen=True)
class GrowthRow:
    n: int
    q1: int
    P_bits: int
    superfactorial_bits: int
    e_n_bits: int

    def as_csv_row(self) -> list:
        return [self.n, self.q1, self.P_bits, self.superfactorial_bits, self.e_n_bits]


@dataclass(frozen=True)
class GapRow:
    t: int
    gap_ratio: Fraction
    predicted: int
    relative_error: Fraction

    def as_csv_row(self) -> list:
        return [
            self.t,
            self.gap_ratio.numerator,
            self.gap_ratio.denominator,
            self.predicted,
            self.relative_error.numerator,
            self.relative_error.denominator,
        ]


def p_growth_table(q1: int, n_min: int, n_max: int) -> list[GrowthRow]:
    if not 3 <= n_min <= n_max <= MAX_GROWTH_N:
        raise ValueError(f"range violation: need 3 <= n_min <= n_max <= {MAX_GROWTH_N}")
    rows = []
    for n in range(n_min, n_max + 1):
        P = compute_P(sylvester_seed(q1, n))
        rows.append(
            GrowthRow(
                n=n,
                q1=q1,
                P_bits=bit_length(P),
                superfactorial_bits=bit_length(superfactorial_bound(n)),
                e_n_bits=bit_length(e_power_floor(n)),
            )
        )
    return rows


def gap_table(q: SeedSequence | Sequence[int], k: int, t_values: Iterable[int]) -> list[GapRow]:
    seed = validate_seed(q)
    if not 1 < k < seed.n:
        raise ValueError(f"k must satisfy 1 < k < n (got k={k}, n={seed.n})")
    rows = []
    for t in t_values:
        mod = construct(seed, t)
        ratio = bounds(mod, k).gap_ratio
        predicted = t * mod.P + seed.q[0] - 1
        rows.append(GapRow(t, ratio, predicted, abs(ratio - predicted) / predicted))
    return rows


def to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row.as_csv_row())
    return buf.getvalue()
