"""Mignotte (k, n) threshold secret sharing over a Mignotte sequence.

A secret ``S`` with ``N < S < M`` is split into the residues ``S mod m_i``.
Any ``k`` residues pin ``S`` down modulo a product that is at least ``M``, so
the CRT recovers it; ``k - 1`` residues only fix it modulo a product of at
most ``N``.

Security caveat: this is the plain scheme.  The secret is not masked, so
fewer than ``k`` shares still leak information about it (see
:func:`enumerate_candidates`).
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .construction import Bounds, MignotteModuli, bounds, is_mignotte
from .numtheory import ResiduePair, crt_combine, product

SHARE_VERSION = 1
SCHEME_NAME = "mignotte"
DEFAULT_ENUMERATION_CAP = 10**7

_SHARE_KEYS = ("version", "scheme", "scheme_id", "n", "k", "index", "modulus", "residue")
_DECIMAL = re.compile(r"0|[1-9][0-9]*")


@dataclass(frozen=True)
class Share:
    index: int
    modulus: int
    residue: int
    scheme_id: str
    n: int
    k: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("share modulus must be >= 2")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("share residue must lie in [0, modulus)")
        if not 1 <= self.index <= self.n:
            raise ValueError(f"share index must lie in [1, {self.n}]")


def scheme_digest(moduli: Sequence[int], k: int) -> str:
    """SHA-256 over ``"mignotte\\nk=<k>\\nmoduli=<m_1>,...,<m_n>\\n"``."""
    text = f"{SCHEME_NAME}\nk={k}\nmoduli={','.join(str(m) for m in moduli)}\n"
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class SchemeParams:
    moduli: tuple[int, ...]
    k: int
    bounds: Bounds = field(init=False)
    scheme_id: str = field(init=False)

    def __post_init__(self):
        ms = self.moduli.m if isinstance(self.moduli, MignotteModuli) else self.moduli
        ms = tuple(int(m) for m in ms)
        object.__setattr__(self, "moduli", ms)
        if not is_mignotte(ms, self.k):
            b = bounds(ms, self.k)
            raise ValueError(f"Mignotte condition fails: {b.M} <= {b.N}")
        object.__setattr__(self, "bounds", bounds(ms, self.k))
        object.__setattr__(self, "scheme_id", scheme_digest(ms, self.k))

    @property
    def n(self) -> int:
        return len(self.moduli)

    @property
    def M(self) -> int:
        return self.bounds.M

    @property
    def N(self) -> int:
        return self.bounds.N


def check_secret_range(secret: int, params: SchemeParams) -> None:
    # messages carry the bound, never the secret
    if secret <= params.N:
        raise ValueError(f"secret below threshold range (N={params.N})")
    if secret >= params.M:
        raise ValueError(f"secret above threshold range (M={params.M})")


def split(secret: int, params: SchemeParams) -> list[Share]:
    check_secret_range(secret, params)
    return [
        Share(i, m, secret % m, params.scheme_id, params.n, params.k)
        for i, m in enumerate(params.moduli, start=1)
    ]


def _check_share_set(shares: Sequence[Share], k: int, scheme_id: str | None) -> None:
    ids = {s.scheme_id for s in shares}
    if len(ids) > 1 or (scheme_id is not None and ids and ids != {scheme_id}):
        raise ValueError("scheme mismatch")
    if len({s.index for s in shares}) != len(shares):
        raise ValueError("duplicate share index")
    if len(shares) < k:
        raise ValueError(f"insufficient shares: have {len(shares)}, need {k}")


def reconstruct(shares: Iterable[Share], params: SchemeParams | None = None) -> int:
    """Recover the secret from ``k`` or more shares.

    Every provided share enters the CRT.  With ``params`` the result must lie
    strictly inside ``(N, M)``.  Without it only the share files themselves
    are known, so the range check falls back to the necessary condition
    ``N' < x < M'`` where ``N'`` is the product of the ``k - 1`` largest and
    ``M'`` the product of the ``k`` smallest supplied moduli (``N' <= N`` and
    ``M' >= M`` always hold).
    """
    shares = sorted(shares, key=lambda s: s.index)
    if not shares:
        raise ValueError("insufficient shares: have 0")
    if params is not None:
        k = params.k
        _check_share_set(shares, k, params.scheme_id)
        for s in shares:
            if s.index > params.n or params.moduli[s.index - 1] != s.modulus:
                raise ValueError("inconsistent or tampered shares")
        lo, hi = params.N, params.M
    else:
        k = shares[0].k
        if any(s.k != k or s.n != shares[0].n for s in shares):
            raise ValueError("scheme mismatch")
        _check_share_set(shares, k, None)
        ms = sorted(s.modulus for s in shares)
        lo, hi = product(ms[len(ms) - k + 1:]), product(ms[:k])

    try:
        x = crt_combine(ResiduePair(s.residue, s.modulus) for s in shares).residue
    except ValueError:
        raise ValueError("inconsistent or tampered shares") from None
    if not lo < x < hi:
        raise ValueError("inconsistent or tampered shares")
    return x


def enumerate_candidates(
    shares: Sequence[Share],
    params: SchemeParams,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[int]:
    """All secrets in ``(N, M)`` consistent with fewer than ``k`` shares."""
    if len(shares) >= params.k:
        raise ValueError("enumeration is for fewer than k shares")
    if params.M > cap:
        raise ValueError("range too large to enumerate")
    if shares:
        _check_share_set(shares, 0, params.scheme_id)
        r = crt_combine(ResiduePair(s.residue, s.modulus) for s in shares)
        start, step = r.residue, r.modulus
    else:
        start, step = 0, 1
    lo, hi = params.N, params.M
    first = start + ((lo + 1 - start + step - 1) // step) * step
    return list(range(first, hi, step))


def secret_from_bytes(data: bytes) -> int:
    return int.from_bytes(data, "big")


def secret_to_bytes(secret: int) -> bytes:
    return secret.to_bytes(max(1, (secret.bit_length() + 7) // 8), "big")


def dump_share(share: Share) -> str:
    """Canonical share file text: JSON, fixed key order, 2-space indent, LF."""
    obj = {
        "version": SHARE_VERSION,
        "scheme": SCHEME_NAME,
        "scheme_id": share.scheme_id,
        "n": share.n,
        "k": share.k,
        "index": share.index,
        "modulus": str(share.modulus),
        "residue": str(share.residue),
    }
    return json.dumps(obj, indent=2) + "\n"


def load_share(text: str) -> Share:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed share file: {e}") from None
    if not isinstance(obj, dict) or tuple(obj) != _SHARE_KEYS:
        raise ValueError("malformed share file: unexpected keys")
    if obj["version"] != SHARE_VERSION:
        raise ValueError(f"unsupported share version {obj['version']!r}")
    if obj["scheme"] != SCHEME_NAME:
        raise ValueError(f"unsupported scheme {obj['scheme']!r}")
    for key in ("n", "k", "index"):
        if type(obj[key]) is not int:
            raise ValueError(f"malformed share file: {key} must be an integer")
    for key in ("modulus", "residue"):
        if not isinstance(obj[key], str) or not _DECIMAL.fullmatch(obj[key]):
            raise ValueError(f"malformed share file: {key} must be a decimal string")
    if not isinstance(obj["scheme_id"], str) or not re.fullmatch(r"[0-9a-f]+", obj["scheme_id"]):
        raise ValueError("malformed share file: scheme_id must be hex")
    return Share(
        index=obj["index"],
        modulus=int(obj["modulus"]),
        residue=int(obj["residue"]),
        scheme_id=obj["scheme_id"],
        n=obj["n"],
        k=obj["k"],
    )
