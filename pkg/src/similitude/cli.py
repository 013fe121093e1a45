"""Command-line front end.

Subcommands: series (emit coefficients), verify (identity cross-checks),
oracle (brute force vs formula), constants (growth/zeta constants).
Exit codes: 0 success, 1 verification or oracle failure, 2 usage error.
Output is deterministic; the thread count never changes a byte of it.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import asymptotics, oracle
from .counting import CrossCheckFailure, Target, closed_sequence, engine_sequence, series, ssm_count
from .dirichlet import is_multiplicative, partial_sum

_SLUGS = {t.value: t for t in Target}


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("SIMILITUDE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def cmd_series(args) -> int:
    if args.terms < 1:
        return _usage_error("terms must be >= 1")
    target = _SLUGS[args.target]
    try:
        seq = series(target, args.terms)
    except CrossCheckFailure as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 1
    square = target.index_kind == "square"
    rows = [(m, m * m if square else m, seq[m]) for m in range(1, args.terms + 1)]
    out = sys.stdout
    if args.format == "csv":
        out.write("m,index,count\n")
        for m, idx, c in rows:
            out.write(f"{m},{idx},{c}\n")
    elif args.format == "json":
        obj = {"target": target.value, "index_kind": target.index_kind,
               "terms": list(seq.values)}
        out.write(json.dumps(obj) + "\n")
    else:
        for m, idx, c in rows:
            out.write(f"{m} {idx} {c}\n")
    return 0


def _verify_one(target: Target, n: int) -> list[tuple[str, bool]]:
    checks = []
    closed = closed_sequence(target, n)
    engine = engine_sequence(target, n)
    checks.append(("engine-vs-closed-form", closed.values == engine.values))
    checks.append(("multiplicativity", is_multiplicative(closed)))
    if target is Target.ZETA_J:
        ok = all(
            closed[m] == sum(d for d in range(1, m + 1) if m % d == 0 and d % 2 == 1)
            for m in range(1, n + 1)
        )
        checks.append(("sum-of-odd-divisors", ok))
    return checks


def cmd_verify(args) -> int:
    if args.terms < 1:
        return _usage_error("terms must be >= 1")
    targets = list(Target) if args.target == "all" else [_SLUGS[args.target]]
    failed = False
    for t in targets:
        for name, ok in _verify_one(t, args.terms):
            status = "PASS" if ok else "FAIL"
            failed |= not ok
            print(f"{status} {name} target={t.value} terms={args.terms}")
    return 1 if failed else 0


def cmd_oracle(args) -> int:
    threads = _threads(args)
    if args.module:
        if args.m is None:
            return _usage_error("--module requires --m")
        m = args.m
        if m < 1:
            return _usage_error("m must be >= 1")
        try:
            ssms = oracle.enumerate_ssm_icosian(m, threads=threads)
        except ValueError as exc:
            return _usage_error(str(exc))
        formula = ssm_count(Target.F_I, m)
        kinds = {"right-ideal": 0, "left-ideal": 0, "two-sided": 0, "product": 0}
        for s in ssms:
            kinds[s.kind] += 1
        ok = len(ssms) == formula
        print(
            f"m={m}: {len(ssms)} SSMs: {kinds['right-ideal']} right, {kinds['left-ideal']} left, "
            f"{kinds['two-sided']} two-sided, {kinds['product']} generic; "
            f"formula={formula} {'MATCH' if ok else 'MISMATCH'}"
        )
        return 0 if ok else 1
    lat = oracle.ambient(args.lattice)
    target = Target.F_Z4 if args.lattice == "z4" else Target.F_J
    max_m = args.max_m if args.max_m is not None else 3
    if max_m < 1:
        return _usage_error("max-m must be >= 1")
    if max_m * max_m > oracle.DEFAULT_INDEX_BOUND:
        return _usage_error(
            f"index {max_m * max_m} exceeds the enumeration bound {oracle.DEFAULT_INDEX_BOUND}"
        )
    failed = False
    for m in range(1, max_m + 1):
        o = oracle.count_ssl_bruteforce(lat, m, threads=threads)
        f = ssm_count(target, m)
        ok = o == f
        failed |= not ok
        print(f"m={m}: oracle={o} formula={f} {'MATCH' if ok else 'MISMATCH'}")
    return 1 if failed else 0


def _fmt(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".")


# constant -> (series target, growth exponent, log power) for --estimate
_ESTIMATES = {
    "residue_dedekind_tau": (Target.DEDEKIND_TAU, 1, 0),
    "residue_dedekind_sqrt2": (Target.DEDEKIND_SQRT2, 1, 0),
    "slope_a_j": (Target.ZETA_J, 2, 0),
    "slope_a_i": (Target.ZETA_I, 2, 0),
    "slope_a_k": (Target.ZETA_K, 2, 0),
    "C_J": (Target.F_J, 2, 1),
    "C_Z4": (Target.F_Z4, 2, 1),
    "slope_f_i": (Target.F_I, 2, 1),
    "slope_f_k": (Target.F_K, 2, 1),
}


def cmd_constants(args) -> int:
    if args.estimate and args.terms < 16:
        return _usage_error("terms must be >= 16 for estimates")
    for name in asymptotics.constant_names():
        row = [name, asymptotics.closed_form(name), _fmt(asymptotics.target_constant(name))]
        if args.estimate:
            rule = _ESTIMATES.get(name)
            if rule is None:
                row += ["-", str(args.terms)]
            else:
                target, alpha, logp = rule
                seq = closed_sequence(target, args.terms)
                denom = args.terms**alpha * math.log(args.terms) ** logp
                row += [_fmt(partial_sum(seq, args.terms) / denom), str(args.terms)]
        print(" ".join(row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="similitude",
        description="Counting functions for similarity sublattices of the 4D hypercubic "
        "lattices and similarity submodules of the Hurwitz, icosian, and cubian "
        "quaternion orders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="emit coefficients of a counting series")
    p.add_argument("--target", required=True, choices=sorted(_SLUGS))
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="cross-check identities and closed forms")
    p.add_argument("--target", default="all", choices=sorted(_SLUGS) + ["all"])
    p.add_argument("--terms", type=int, default=10_000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force counts vs formulas")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--lattice", choices=("z4", "d4star"))
    group.add_argument("--module", choices=("icosian",))
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("constants", help="closed-form constants (and estimates)")
    p.add_argument("--estimate", action="store_true")
    p.add_argument("--terms", type=int, default=10_000)
    p.set_defaults(func=cmd_constants)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
