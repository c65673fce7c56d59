import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mignotte.construction import construct, sylvester_seed
from mignotte.sharing import (
    SchemeParams,
    Share,
    dump_share,
    enumerate_candidates,
    load_share,
    reconstruct,
    scheme_digest,
    secret_from_bytes,
    secret_to_bytes,
    split,
)
from oracles import random_coprime_seed


@pytest.fixture
def canonical():
    return SchemeParams(construct([1, 2, 3]).m, 2)


def triples(shares):
    return [(s.index, s.modulus, s.residue) for s in shares]


def test_split_example(canonical):
    assert triples(split(7, canonical)) == [(1, 3, 1), (2, 4, 3), (3, 5, 2)]


def test_split_range_is_strict(canonical):
    with pytest.raises(ValueError, match="secret below threshold range"):
        split(5, canonical)
    with pytest.raises(ValueError, match="secret above threshold range"):
        split(12, canonical)


def test_split_errors_do_not_echo_secret():
    params = SchemeParams(construct([1, 2, 3], 50).m, 2)
    with pytest.raises(ValueError) as exc:
        split(987654321987654321, params)
    assert "987654321987654321" not in str(exc.value)


def test_params_reject_non_mignotte():
    with pytest.raises(ValueError, match="Mignotte condition fails"):
        SchemeParams((2, 3, 7), 2)


def test_reconstruct_examples(canonical):
    sid = canonical.scheme_id
    s1, s2, s3 = (Share(i, m, r, sid, 3, 2) for i, m, r in [(1, 3, 1), (2, 4, 3), (3, 5, 2)])
    assert reconstruct([s1, s2], canonical) == 7
    assert reconstruct([s2, s3], canonical) == 7
    assert reconstruct([s1, s2, s3], canonical) == 7
    bad = Share(2, 4, 0, sid, 3, 2)
    with pytest.raises(ValueError, match="inconsistent or tampered shares"):
        reconstruct([s1, bad], canonical)
    # the share files alone also catch it: 4 <= product of the k-1 largest supplied moduli
    with pytest.raises(ValueError, match="inconsistent or tampered shares"):
        reconstruct([s1, bad])


def test_reconstruct_errors(canonical):
    shares = split(7, canonical)
    with pytest.raises(ValueError, match="insufficient shares: have 1, need 2"):
        reconstruct(shares[:1], canonical)
    other = SchemeParams(construct([1, 2, 3], 3).m, 2)
    foreign = split(20, other)
    with pytest.raises(ValueError, match="scheme mismatch"):
        reconstruct([shares[0], foreign[1]], canonical)
    with pytest.raises(ValueError, match="scheme mismatch"):
        reconstruct([shares[0], foreign[1]])
    with pytest.raises(ValueError, match="duplicate"):
        reconstruct([shares[0], shares[0]], canonical)


def test_enumerate_candidates_examples(canonical):
    shares = split(7, canonical)
    assert enumerate_candidates([shares[0]], canonical) == [7, 10]
    assert enumerate_candidates([shares[2]], canonical) == [7]
    assert enumerate_candidates([], canonical) == [6, 7, 8, 9, 10, 11]


def test_enumerate_candidates_cap():
    params = SchemeParams(construct([1, 2, 3], 10**4).m, 2)
    with pytest.raises(ValueError, match="range too large to enumerate"):
        enumerate_candidates([], params)


def small_schemes():
    def build(seed_rng, n, t, k_off):
        seed = random_coprime_seed(random.Random(seed_rng), n, hi=20)
        mod = construct(seed, t)
        return SchemeParams(mod.m, 2 + k_off % (n - 2))

    return st.builds(build, st.integers(0, 10**6), st.integers(3, 6), st.integers(1, 3), st.integers(0, 10))


@settings(max_examples=40, deadline=None)
@given(small_schemes(), st.data())
def test_round_trip_every_k_subset(params, data):
    secret = data.draw(st.integers(params.N + 1, params.M - 1))
    shares = split(secret, params)
    for subset in combinations(shares, params.k):
        assert reconstruct(list(subset), params) == secret
        assert reconstruct(list(subset)) == secret
    for j in range(params.k + 1, params.n + 1):
        for subset in combinations(shares, j):
            assert reconstruct(list(subset), params) == secret


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_candidate_soundness(data):
    params = SchemeParams(construct([1, 2, 3, 5], 1).m, data.draw(st.integers(2, 3)))
    secret = data.draw(st.integers(params.N + 1, params.M - 1))
    shares = split(secret, params)
    picked = data.draw(st.lists(st.sampled_from(shares), max_size=params.k - 1, unique_by=lambda s: s.index))
    cands = enumerate_candidates(picked, params)
    assert secret in cands
    assert cands == sorted(cands)
    brute = [x for x in range(params.N + 1, params.M) if all(x % s.modulus == s.residue for s in picked)]
    assert cands == brute


def test_split_is_deterministic(canonical):
    assert split(9, canonical) == split(9, canonical)
    assert [dump_share(s) for s in split(9, canonical)] == [dump_share(s) for s in split(9, canonical)]


def test_scheme_id_is_content_digest():
    a = SchemeParams((3, 4, 5), 2)
    b = SchemeParams(construct([1, 2, 3]), 2)
    assert a.scheme_id == b.scheme_id == scheme_digest((3, 4, 5), 2)
    assert scheme_digest((3, 4, 5), 2) != scheme_digest((7, 8, 9), 2)


def test_share_file_is_canonical(canonical):
    share = split(7, canonical)[0]
    text = dump_share(share)
    assert text == (
        "{\n"
        '  "version": 1,\n'
        '  "scheme": "mignotte",\n'
        f'  "scheme_id": "{canonical.scheme_id}",\n'
        '  "n": 3,\n'
        '  "k": 2,\n'
        '  "index": 1,\n'
        '  "modulus": "3",\n'
        '  "residue": "1"\n'
        "}\n"
    )
    assert load_share(text) == share
    assert dump_share(load_share(text)) == text


@pytest.mark.parametrize(
    "mutate",
    [
        lambda o: o.update(modulus=3),
        lambda o: o.update(residue="1e3"),
        lambda o: o.update(residue="01"),
        lambda o: o.update(version=2),
        lambda o: o.update(scheme="asmuth-bloom"),
        lambda o: o.pop("k"),
    ],
)
def test_load_share_rejects_malformed(canonical, mutate):
    obj = json.loads(dump_share(split(7, canonical)[0]))
    mutate(obj)
    with pytest.raises(ValueError):
        load_share(json.dumps(obj))


def test_large_scheme_round_trip():
    mod = construct(sylvester_seed(2, 6), 7)
    params = SchemeParams(mod, 4)
    secret = params.N + 12345678901234567890
    shares = split(secret, params)
    assert reconstruct(shares[2:], params) == secret
    assert load_share(dump_share(shares[5])) == shares[5]


@given(st.binary(min_size=1, max_size=40).filter(lambda b: b[0] != 0))
def test_bytes_mapping_round_trip(data):
    assert secret_to_bytes(secret_from_bytes(data)) == data
