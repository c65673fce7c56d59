from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mignotte.numtheory import ResiduePair, crt_combine, gcd, pairwise_coprime, to_rational
from oracles import naive_pairwise_coprime, scan_crt, trial_gcd


@pytest.mark.parametrize("a,b,expected", [(12, 8, 4), (7, 1, 1), (5, 5, 5), (9, 0, 9), (0, 4, 4)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_zero_zero():
    with pytest.raises(ValueError, match="undefined gcd"):
        gcd(0, 0)


@given(st.integers(1, 2000), st.integers(1, 2000))
def test_gcd_is_greatest_common_divisor(a, b):
    g = gcd(a, b)
    assert a % g == 0 and b % g == 0
    for d in range(1, min(a, b) + 1):
        if a % d == 0 and b % d == 0:
            assert g % d == 0
    assert g == trial_gcd(a, b)


@given(st.integers(0, 10**40), st.integers(1, 10**40))
def test_gcd_euclid_step(a, b):
    assert gcd(a, b) == gcd(b, a % b)


def test_pairwise_coprime_examples():
    assert pairwise_coprime([3, 4, 5])
    assert not pairwise_coprime([2, 4])
    assert pairwise_coprime([7])
    with pytest.raises(ValueError, match="empty sequence"):
        pairwise_coprime([])


@given(st.lists(st.integers(1, 300), min_size=1, max_size=6))
def test_pairwise_coprime_matches_oracle(xs):
    assert pairwise_coprime(xs) == naive_pairwise_coprime(xs)


def test_crt_examples():
    assert crt_combine([ResiduePair(1, 3), ResiduePair(3, 4)]) == ResiduePair(7, 12)
    assert crt_combine([ResiduePair(0, 2), ResiduePair(0, 3)]) == ResiduePair(0, 6)
    with pytest.raises(ValueError, match="moduli not coprime"):
        crt_combine([ResiduePair(1, 2), ResiduePair(0, 4)])
    with pytest.raises(ValueError):
        crt_combine([])


def test_residue_pair_invariants():
    with pytest.raises(ValueError):
        ResiduePair(0, 1)
    with pytest.raises(ValueError):
        ResiduePair(5, 5)


@st.composite
def coprime_congruences(draw, max_product=10**6):
    moduli = []
    prod = 1
    for m in draw(st.lists(st.integers(2, 200), min_size=1, max_size=5)):
        if prod * m <= max_product and all(trial_gcd(m, x) == 1 for x in moduli):
            moduli.append(m)
            prod *= m
    return [ResiduePair(draw(st.integers(0, m - 1)), m) for m in moduli]


@settings(max_examples=60, deadline=None)
@given(coprime_congruences())
def test_crt_matches_exhaustive_scan(pairs):
    got = crt_combine(pairs)
    assert (got.residue, got.modulus) == scan_crt([(p.residue, p.modulus) for p in pairs])


@given(st.lists(st.tuples(st.integers(0, 10**30), st.sampled_from([7, 11, 13, 10**9 + 7, 2**61 - 1, 64])),
                min_size=1, max_size=6, unique_by=lambda t: t[1]))
def test_crt_satisfies_every_congruence(raw):
    pairs = [ResiduePair(r % m, m) for r, m in raw]
    got = crt_combine(pairs)
    assert 0 <= got.residue < got.modulus
    for p in pairs:
        assert got.residue % p.modulus == p.residue


def test_to_rational():
    assert to_rational(7, 5) == Fraction(7, 5)
    r = to_rational(4, 8)
    assert (r.numerator, r.denominator) == (1, 2)
    r = to_rational(0, 9)
    assert (r.numerator, r.denominator) == (0, 1)
    assert to_rational(-6, 4).numerator == -3
    with pytest.raises(ValueError, match="zero denominator"):
        to_rational(1, 0)
