"""Command-line front end.

Subcommands: summary, apery, verify, sweep.  A sequence is chosen with
--seq A,B or the shortcuts --fib / --lucas; start index and step are
--n / --d.  Exit codes: 0 success, 1 verification mismatch, 2 invalid
parameters or usage, 3 oracle infeasible at the configured ceiling,
4 output could not be written.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from itertools import product

from .oracle import (
    OracleInfeasibleError,
    build_membership,
    oracle_apery,
    oracle_frobenius,
    oracle_genus,
    oracle_minimal_generators,
)
from .semigroup import (
    NotCoprimeSeedError,
    NotNumericalSemigroupError,
    SemigroupParams,
    apery_set,
    frobenius,
    genus,
    minimal_generators,
    summary,
    validate,
)
from .sequences import FIBONACCI, LUCAS, SequenceSpec, genfib

SWEEP_FIELDS = (
    "a",
    "b",
    "n",
    "d",
    "kappa",
    "frobenius",
    "genus",
    "verified",
    "error",
)


def _parse_seq(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected A,B with two integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must be integers, got {text!r}") from None


def _parse_span(text: str) -> range:
    lo, _, hi = text.partition(":")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if hi else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}") from None
    return range(lo_i, hi_i + 1)


def _parse_int_list(text: str) -> list[int]:
    items = [p for p in text.split(",") if p.strip()]
    try:
        return [int(p) for p in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected D1,D2,..., got {text!r}") from None


def _resolve_spec(args) -> SequenceSpec:
    if args.seq is not None:
        return SequenceSpec(*args.seq)
    return FIBONACCI if args.fib else LUCAS


def _verify_checks(params: SemigroupParams) -> list[tuple[str, object, object]]:
    """Closed-form results next to their brute-force counterparts."""
    gens = minimal_generators(params)
    table = build_membership(gens)
    extended = gens + [genfib(params.spec, params.n + len(gens) * params.d)]
    return [
        ("frobenius", frobenius(params), oracle_frobenius(table)),
        ("genus", genus(params), oracle_genus(table)),
        ("apery", apery_set(params), oracle_apery(table, params.vn)),
        ("minimal-generators", gens, oracle_minimal_generators(extended)),
    ]


def cmd_summary(args) -> int:
    params = validate(_resolve_spec(args), args.n, args.d)
    s = summary(params)
    if args.format == "json":
        payload = {
            "a": params.spec.v1,
            "b": params.spec.v2,
            "n": params.n,
            "d": params.d,
            "embedding_dimension": s.embedding_dim,
            "min_generators": list(s.min_generators),
            "frobenius": s.frobenius,
            "genus": s.genus,
        }
        print(json.dumps(payload, indent=2))
    else:
        gens = ", ".join(str(g) for g in s.min_generators)
        print(f"S = <{gens}>")
        print(f"embedding dimension: {s.embedding_dim}")
        print(f"frobenius number: {s.frobenius}")
        print(f"genus: {s.genus}")
    return 0


def cmd_apery(args) -> int:
    params = validate(_resolve_spec(args), args.n, args.d)
    table = apery_set(params)
    for residue in sorted(table):
        print(f"{residue} {table[residue]}")
    return 0


def cmd_verify(args) -> int:
    params = validate(_resolve_spec(args), args.n, args.d)
    checks = _verify_checks(params)
    passed = 0
    for name, ours, reference in checks:
        if ours == reference:
            passed += 1
            print(f"{name}: ok")
        else:
            print(f"{name}: MISMATCH closed-form={ours!r} oracle={reference!r}")
    print(f"{passed}/{len(checks)} checks passed")
    return 0 if passed == len(checks) else 1


def _sweep_row(a: int, b: int, n: int, d: int, do_verify: bool) -> dict:
    row: dict = dict.fromkeys(SWEEP_FIELDS)
    row.update(a=a, b=b, n=n, d=d)
    try:
        params = validate(SequenceSpec(a, b), n, d)
    except (ValueError, NotCoprimeSeedError, NotNumericalSemigroupError) as exc:
        row["error"] = str(exc)
        return row
    s = summary(params)
    row.update(kappa=s.embedding_dim, frobenius=s.frobenius, genus=s.genus)
    if do_verify:
        try:
            checks = _verify_checks(params)
            row["verified"] = all(ours == ref for _, ours, ref in checks)
        except OracleInfeasibleError as exc:
            row["verified"] = False
            row["error"] = str(exc)
    return row


def _write_sweep(handle, rows: list[dict], fmt: str):
    if fmt == "json":
        json.dump(rows, handle, indent=2)
        handle.write("\n")
        return
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(SWEEP_FIELDS)
    for row in rows:
        record = []
        for name in SWEEP_FIELDS:
            value = row[name]
            if value is None:
                record.append("")
            elif isinstance(value, bool):
                record.append("true" if value else "false")
            else:
                record.append(value)
        writer.writerow(record)


def cmd_sweep(args) -> int:
    pairs: list[tuple[int, int]] = []
    for pair in [
        *(args.seq or []),
        *([(FIBONACCI.v1, FIBONACCI.v2)] if args.fib else []),
        *([(LUCAS.v1, LUCAS.v2)] if args.lucas else []),
    ]:
        if pair not in pairs:
            pairs.append(pair)
    if not pairs:
        print("error: no sequences given (--seq/--fib/--lucas)", file=sys.stderr)
        return 2
    if not args.d:
        print("error: empty step list", file=sys.stderr)
        return 2
    if not args.n:
        print("error: empty index range", file=sys.stderr)
        return 2
    rows = [
        _sweep_row(a, b, n, d, args.verify)
        for (a, b), n, d in sorted(product(pairs, args.n, args.d))
    ]
    try:
        with open(args.out, "w", newline="") as handle:
            _write_sweep(handle, rows, args.format)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 4
    return 0


def _add_single_spec(sp):
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--seq", type=_parse_seq, metavar="A,B", help="seed pair V_1,V_2")
    group.add_argument("--fib", action="store_true", help="Fibonacci seeds 1,1")
    group.add_argument("--lucas", action="store_true", help="Lucas seeds 1,3")
    sp.add_argument("--n", type=int, required=True, help="start index")
    sp.add_argument("--d", type=int, required=True, help="index step")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibsemi",
        description="Numerical semigroups from stepped generalized Fibonacci terms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summary", help="embedding dimension, generators, frobenius, genus")
    _add_single_spec(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_summary)

    p = sub.add_parser("apery", help="Apery set with respect to V_n")
    _add_single_spec(p)
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser("verify", help="compare closed forms against the brute-force oracle")
    _add_single_spec(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="tabulate a parameter grid to CSV or JSON")
    p.add_argument("--seq", type=_parse_seq, action="append", metavar="A,B",
                   help="seed pair, repeatable")
    p.add_argument("--fib", action="store_true", help="include Fibonacci seeds")
    p.add_argument("--lucas", action="store_true", help="include Lucas seeds")
    p.add_argument("--n", type=_parse_span, required=True, metavar="LO:HI")
    p.add_argument("--d", type=_parse_int_list, required=True, metavar="D1,D2,...")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--verify", action="store_true", help="check every row against the oracle")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotCoprimeSeedError, NotNumericalSemigroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleInfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
