"""Direct construction of Mignotte sequences and Mignotte secret sharing."""

from .construction import (
    Bounds,
    MignotteModuli,
    SeedSequence,
    bounds,
    check_strong_general,
    check_strong_n3,
    compute_P,
    construct,
    is_mignotte,
    superfactorial_bound,
    sylvester_seed,
    validate_seed,
)
from .numtheory import ResiduePair, crt_combine, gcd, pairwise_coprime, to_rational
from .sharing import SchemeParams, Share, enumerate_candidates, reconstruct, split

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "MignotteModuli",
    "ResiduePair",
    "SchemeParams",
    "SeedSequence",
    "Share",
    "bounds",
    "check_strong_general",
    "check_strong_n3",
    "compute_P",
    "construct",
    "crt_combine",
    "enumerate_candidates",
    "gcd",
    "is_mignotte",
    "pairwise_coprime",
    "reconstruct",
    "split",
    "superfactorial_bound",
    "sylvester_seed",
    "to_rational",
    "validate_seed",
]
