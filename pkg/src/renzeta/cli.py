"""Command-line front end: evaluation, series windows, verification suites,
and table export, with deterministic exact output.

Exit codes: 0 success, 1 usage, 2 pole in the direction limit, 3 precision
failure, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from itertools import product as iproduct

from renzeta.arith import DeltaRationalFunction, PoleAtZero
from renzeta.laurent import PrecisionError
from renzeta.mzv import (
    pole_depth,
    regularized_expansion,
    renorm_directional,
    renorm_mzv,
    renormalized_series,
)
from renzeta.suites import run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_POLE = 2
EXIT_PRECISION = 3
EXIT_VERIFY = 4

PRECISION_ENV = "RENZETA_PRECISION"


class UsageError(Exception):
    """Malformed command line or argument values."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_exponents(text: str) -> tuple:
    try:
        values = tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse exponent list {text!r}") from None
    if any(v > 0 for v in values):
        raise UsageError("exponents must be <= 0")
    return values


def _parse_directions(text: str, count: int) -> tuple:
    entries = [p.strip() for p in text.split(",")]
    if len(entries) != count:
        raise UsageError(
            f"expected {count} directions, got {len(entries)}")
    out = []
    for entry in entries:
        try:
            value = Fraction(entry)
        except (ValueError, ZeroDivisionError):
            try:
                value = DeltaRationalFunction.parse(entry)
            except ValueError:
                raise UsageError(
                    f"cannot parse direction {entry!r}") from None
            if value.is_rational():
                value = value.as_rational()
        if isinstance(value, Fraction) and value <= 0:
            raise UsageError(f"direction {entry!r} must be positive")
        out.append(value)
    return tuple(out)


def _resolve_precision(args) -> int:
    if args.prec is not None:
        text = args.prec
    else:
        text = os.environ.get(PRECISION_ENV, "6")
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"precision {text!r} is not an integer") from None
    if value < 1:
        raise UsageError("precision must be >= 1")
    return value


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _approx_float(value) -> float:
    if isinstance(value, DeltaRationalFunction):
        if not value.is_rational():
            raise UsageError(
                "cannot approximate a direction-dependent value")
        value = value.as_rational()
    return float(value)


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_eval(args) -> int:
    s = _parse_exponents(args.s)
    value = renorm_mzv(s)
    if args.format == "json":
        row = {"s": list(s), "r": "auto-delta", "value": str(value)}
        if args.approx:
            row["approx"] = _approx_float(value)
        _print_json(row)
    else:
        line = str(value)
        if args.approx:
            line += f" ~ {_approx_float(value)!r}"
        print(line)
    return EXIT_OK


def cmd_directional(args) -> int:
    s = _parse_exponents(args.s)
    r = _parse_directions(args.r, len(s))
    try:
        value = renorm_directional(s, r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        row = {"s": list(s), "r": [str(x) for x in r],
               "value": str(value)}
        if args.approx:
            row["approx"] = _approx_float(value)
        _print_json(row)
    else:
        line = str(value)
        if args.approx:
            line += f" ~ {_approx_float(value)!r}"
        print(line)
    return EXIT_OK


def cmd_series(args) -> int:
    s = _parse_exponents(args.s)
    r = _parse_directions(args.r, len(s))
    precision = _resolve_precision(args)
    depth = pole_depth(s)
    # precision counts printed coefficients: the regularized window starts
    # at -depth, the pole-free window at 0
    target = precision - depth
    try:
        regularized = regularized_expansion(s, r, max(1, target))
        if target < 1:
            regularized = regularized.truncated(target)
        renormalized = renormalized_series(
            s, r, precision - 1).truncated(precision)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _print_json({
            "s": list(s),
            "r": [str(x) for x in r],
            "regularized": regularized.to_json(),
            "renormalized": renormalized.to_json(),
        })
    else:
        print(f"regularized: {regularized}")
        print(f"renormalized: {renormalized}")
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suite(
        args.suite, max_weight=args.max_weight, seed=args.seed)
    failed = False
    for report in reports:
        if not report.passed:
            failed = True
        if args.format == "json":
            _print_json(report.to_json())
        elif report.passed:
            print(f"ok {report.check}: {report.word}")
        else:
            print(f"FAIL {report.check}: {report.word}: "
                  f"{report.lhs} != {report.rhs}")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_table(args) -> int:
    # an unsatisfiable range (max_depth < 1 or min_s > 0) is an empty
    # table, not an error
    rows = []
    exponent_range = range(0, args.min_s - 1, -1)
    for depth in range(1, args.max_depth + 1):
        for s in iproduct(exponent_range, repeat=depth):
            row = {"s": list(s), "r": "auto-delta"}
            try:
                row["value"] = str(renorm_mzv(s))
            except PoleAtZero:
                row["error"] = "pole-at-zero"
            rows.append(row)
    if args.format == "text":
        for row in rows:
            label = ",".join(str(v) for v in row["s"])
            print(f"({label}): {row.get('value', row.get('error'))}")
    else:
        print(json.dumps(rows, indent=2, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Wiring.

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="renzeta",
        description="Exact renormalized multiple zeta values at "
                    "non-positive integers.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p, default="text"):
        p.add_argument("--format", choices=("text", "json"),
                       default=default)

    p = sub.add_parser(
        "eval", help="value at non-positive exponents, directions |s|+d")
    p.add_argument("--s", required=True, metavar="S1,S2,...")
    p.add_argument("--approx", action="store_true",
                   help="print a float approximation alongside")
    add_format(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser(
        "directional", help="value at explicit positive directions")
    p.add_argument("--s", required=True, metavar="S1,S2,...")
    p.add_argument("--r", required=True, metavar="R1,R2,...")
    p.add_argument("--approx", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_directional)

    p = sub.add_parser(
        "series", help="regularized and pole-free expansion windows")
    p.add_argument("--s", required=True, metavar="S1,S2,...")
    p.add_argument("--r", required=True, metavar="R1,R2,...")
    p.add_argument("--prec", default=None,
                   help=f"printed coefficients per series "
                        f"(default ${PRECISION_ENV} or 6)")
    add_format(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("--suite", required=True,
                   choices=("hopf", "rota-baxter", "birkhoff",
                            "differential", "mzv", "all"))
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "table", help="values over an exponent range, pole rows kept")
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--min-s", type=int, required=True)
    add_format(p, default="json")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PoleAtZero as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_POLE
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
