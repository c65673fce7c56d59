"""Command-line interface.

Exit codes: 0 success, 1 domain failure, 2 usage error.  Machine-readable
output goes to stdout, diagnostics to stderr.  Large integers cross the
boundary only as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import analysis
from .construction import (
    MignotteModuli,
    SeedSequence,
    bounds,
    compute_P,
    construct,
    sylvester_seed,
)
from .numtheory import first_common_factor_pair
from .sharing import (
    SchemeParams,
    dump_share,
    load_share,
    reconstruct,
    secret_from_bytes,
    secret_to_bytes,
    split,
)

MODULI_FILE_VERSION = 1
DEFAULT_MAX_T = 10**6
_MODULI_KEYS = ("version", "n", "k_hint", "moduli", "provenance")
_PROVENANCE_KEYS = ("seed", "t", "P")
_DECIMAL = re.compile(r"0|[1-9][0-9]*")


class UsageError(Exception):
    pass


def _parse_int(text: str, what: str) -> int:
    text = text.strip()
    if not _DECIMAL.fullmatch(text):
        raise ValueError(f"{what} must be a non-negative decimal integer, got {text!r}")
    return int(text)


def _parse_int_list(text: str, what: str) -> list[int]:
    parts = [p for p in re.split(r"[\s,]+", text.strip()) if p]
    if not parts:
        raise ValueError(f"{what} is empty")
    return [_parse_int(p, what) for p in parts]


def _read_list_arg(value: str, what: str) -> list[int]:
    """A literal list like ``1,2,3`` or a path to a file holding one."""
    if os.path.isfile(value):
        return _parse_int_list(Path(value).read_text(encoding="utf-8"), what)
    return _parse_int_list(value, what)


def dump_moduli_file(mod: MignotteModuli, k_hint: int | None = None) -> str:
    obj = {
        "version": MODULI_FILE_VERSION,
        "n": mod.n,
        "k_hint": k_hint,
        "moduli": [str(m) for m in mod.m],
        "provenance": {
            "seed": [str(q) for q in mod.seed.q],
            "t": mod.t,
            "P": str(mod.P),
        },
    }
    return json.dumps(obj, indent=2) + "\n"


def load_moduli_file(text: str) -> tuple[MignotteModuli, int | None]:
    """Parse a moduli file and re-derive the moduli from its provenance."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed moduli file: {e}") from None
    if not isinstance(obj, dict) or tuple(obj) != _MODULI_KEYS:
        raise ValueError("malformed moduli file: unexpected keys")
    if obj["version"] != MODULI_FILE_VERSION:
        raise ValueError(f"unsupported moduli file version {obj['version']!r}")
    prov = obj["provenance"]
    if not isinstance(prov, dict) or tuple(prov) != _PROVENANCE_KEYS:
        raise ValueError("malformed moduli file: bad provenance")
    try:
        moduli = [_parse_int(m, "modulus") for m in obj["moduli"]]
        seed = SeedSequence([_parse_int(q, "seed term") for q in prov["seed"]])
        P = _parse_int(prov["P"], "P")
    except (TypeError, AttributeError):
        raise ValueError("malformed moduli file: integers must be decimal strings") from None
    t = prov["t"]
    if type(t) is not int or t < 1:
        raise ValueError("malformed moduli file: t must be a positive integer")
    if P != compute_P(seed):
        raise ValueError("moduli file provenance mismatch: P is not the seed's difference product")
    if obj["n"] != len(moduli):
        raise ValueError("moduli file provenance mismatch: n")
    k_hint = obj["k_hint"]
    if k_hint is not None and type(k_hint) is not int:
        raise ValueError("malformed moduli file: k_hint must be an integer or null")
    try:
        mod = MignotteModuli(tuple(moduli), seed, P, t)
    except ValueError:
        raise ValueError("moduli file provenance mismatch: moduli != t*P + q_i") from None
    return mod, k_hint


def _load_moduli_arg(value: str) -> tuple[list[int], int | None]:
    if os.path.isfile(value):
        text = Path(value).read_text(encoding="utf-8")
        if text.lstrip().startswith("{"):
            mod, k_hint = load_moduli_file(text)
            return list(mod.m), k_hint
        return _parse_int_list(text, "moduli"), None
    return _parse_int_list(value, "moduli"), None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_seed(args) -> int:
    if args.q1 < 1:
        raise ValueError("q1 must be positive")
    if args.n < 3:
        raise ValueError("n must be ≥ 3")
    seed = sylvester_seed(args.q1, args.n)
    _emit(" ".join(str(q) for q in seed.q) + "\n", args.out)
    return 0


def cmd_construct(args) -> int:
    if args.t < 1:
        raise ValueError("iteration count must be positive")
    if args.t > args.max_t:
        raise ValueError(f"t={args.t} exceeds the limit {args.max_t} (raise --max-t)")
    seed = SeedSequence(_read_list_arg(args.seed, "seed"))
    mod = construct(seed, args.t)
    if args.out:
        _emit(dump_moduli_file(mod, args.k_hint), args.out)
    print(f"P={mod.P}")
    print(f"t={mod.t}")
    print("moduli=" + ",".join(str(m) for m in mod.m))
    return 0


def _fraction_str(fr) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def cmd_verify(args) -> int:
    moduli, k_hint = _load_moduli_arg(args.moduli)
    n = len(moduli)
    if args.k == "all" or (args.k is None and k_hint is None):
        ks = list(range(2, n))
    else:
        ks = [_parse_int(args.k, "k") if args.k is not None else k_hint]
    if n < 3:
        raise ValueError("need at least 3 moduli")
    if any(m < 2 for m in moduli):
        raise ValueError("moduli must be >= 2")
    if any(a >= b for a, b in zip(moduli, moduli[1:])):
        raise ValueError("not increasing")
    bad = first_common_factor_pair(moduli)
    if bad is not None:
        raise ValueError(f"not coprime: ({bad[0]},{bad[1]})")
    print("pairwise coprime: pass")
    warn_at = args.warn_ratio
    for k in ks:
        b = bounds(moduli, k)
        if b.M <= b.N:
            raise ValueError(f"Mignotte condition fails: {b.M} ≤ {b.N}")
        print(f"k={k}: pass M={b.M} N={b.N} ratio={_fraction_str(b.gap_ratio)}")
        if b.gap_ratio < warn_at:
            print(
                f"warning: k={k} gap ratio {_fraction_str(b.gap_ratio)} is below {warn_at}",
                file=sys.stderr,
            )
    return 0


def _read_secret(value: str) -> int:
    if value.startswith("@"):
        return secret_from_bytes(Path(value[1:]).read_bytes())
    if not _DECIMAL.fullmatch(value.strip()):
        # do not echo the value
        raise ValueError("secret must be a decimal integer or @file")
    return int(value.strip())


def cmd_split(args) -> int:
    moduli, k_hint = _load_moduli_arg(args.moduli)
    k = args.k if args.k is not None else k_hint
    if k is None:
        raise UsageError("--k is required when the moduli carry no k_hint")
    params = SchemeParams(tuple(moduli), k)
    shares = split(_read_secret(args.secret), params)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for s in shares:
        (out_dir / f"share_{s.index}.json").write_text(dump_share(s), encoding="utf-8", newline="\n")
    print(params.scheme_id)
    return 0


def cmd_combine(args) -> int:
    shares = [load_share(Path(p).read_text(encoding="utf-8")) for p in args.shares]
    params = None
    if args.moduli:
        moduli, k_hint = _load_moduli_arg(args.moduli)
        k = args.k or k_hint or (shares[0].k if shares else None)
        params = SchemeParams(tuple(moduli), k)
    secret = reconstruct(shares, params)
    print(secret)
    if args.bytes:
        sys.stdout.flush()
        sys.stdout.buffer.write(secret_to_bytes(secret) + b"\n")
        sys.stdout.buffer.flush()
    return 0


def _parse_n_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise UsageError(f"--n must look like 5 or 3..8, got {text!r}")
    lo = int(m.group(1))
    return lo, int(m.group(2)) if m.group(2) else lo


def cmd_analyze(args) -> int:
    if args.mode == "p-growth":
        if args.q1 is None or args.n is None:
            raise UsageError("--mode p-growth needs --q1 and --n")
        lo, hi = _parse_n_range(args.n)
        rows = analysis.p_growth_table(args.q1, lo, hi)
        text = analysis.to_csv(analysis.GROWTH_HEADER, rows)
    else:
        if args.seed is None or args.k is None or args.t is None:
            raise UsageError("--mode gap needs --seed, --k and --t")
        seed = SeedSequence(_read_list_arg(args.seed, "seed"))
        t_values = _parse_int_list(args.t, "t")
        rows = analysis.gap_table(seed, args.k, t_values)
        text = analysis.to_csv(analysis.GAP_HEADER, rows)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mignotte",
        description="Construct Mignotte sequences and run Mignotte threshold secret sharing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seed", help="generate a pairwise coprime Sylvester-style seed")
    p.add_argument("--q1", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_seed)

    p = sub.add_parser("construct", help="build moduli t*P + q_i from a seed")
    p.add_argument("--seed", required=True, help="comma list (1,2,3) or a file holding one")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--max-t", type=int, default=DEFAULT_MAX_T)
    p.add_argument("--k-hint", type=int)
    p.add_argument("--out", help="write a moduli file here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check coprimality and the Mignotte condition")
    p.add_argument("--moduli", required=True, help="comma list or moduli file")
    p.add_argument("--k", help="threshold, or 'all' for every 1 < k < n")
    p.add_argument("--warn-ratio", type=int, default=1,
                   help="warn when the gap ratio (M-N)/N is below this (default 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("split", help="split a secret into share files")
    p.add_argument("--secret", required=True, help="decimal integer, or @file for big-endian bytes")
    p.add_argument("--moduli", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("combine", help="reconstruct a secret from share files")
    p.add_argument("--shares", nargs="+", required=True)
    p.add_argument("--moduli", help="full moduli set, enables the exact (N, M) range check")
    p.add_argument("--k", type=int)
    p.add_argument("--bytes", action="store_true", help="also write the secret as raw bytes")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("analyze", help="emit growth tables as CSV")
    p.add_argument("--mode", required=True, choices=["p-growth", "gap"])
    p.add_argument("--q1", type=int)
    p.add_argument("--n", help="single n or range like 3..8")
    p.add_argument("--seed")
    p.add_argument("--k", type=int)
    p.add_argument("--t", help="comma list of iteration counts")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"{parser.prog}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
