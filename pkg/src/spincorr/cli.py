"""Command-line frontend with deterministic CSV/JSON output.

Exit codes: 0 success, 1 selftest failure, 2 malformed input, 3 semantic
constraint violation.  Results go to stdout, diagnostics to stderr.  The
enumeration budget honours the SPINCORR_ENUM_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Dict, List

from .cg import cg_squared, convergence_scan, decimal_string
from .errors import (
    BudgetExceededError,
    ConstraintError,
    DegeneratePriorsError,
    InvalidQuantumNumberError,
)
from .halfint import format_half_integer, parse_half_integer
from .pathcount import Priors, probability_table
from .selection import allowed_m_pairs, check_triangle
from .selftest import run_selftest

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_MALFORMED = 2
EXIT_CONSTRAINT = 3

PROB_COLUMNS = ["n", "j1", "j2", "J", "M", "m1", "m2", "p_num", "p_den", "p_decimal"]
CG_COLUMNS = ["j1", "j2", "J", "M", "m1", "m2", "cg2_num", "cg2_den", "cg2_decimal"]
CONVERGE_COLUMNS = PROB_COLUMNS + [
    "cg2_num", "cg2_den", "cg2_decimal", "delta_num", "delta_den", "delta_decimal",
]


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit(rows: List[Dict], columns: List[str], args, command: str) -> None:
    if args.format == "json":
        payload = {
            "command": command,
            "params": {
                k: v for k, v in vars(args).items()
                if k not in ("func", "format") and v is not None
            },
            "rows": rows,
        }
        json.dump(payload, sys.stdout, indent=2)
        print()
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def _frac_fields(prefix: str, value: Fraction, digits: int) -> Dict:
    return {
        f"{prefix}_num": value.numerator,
        f"{prefix}_den": value.denominator,
        f"{prefix}_decimal": decimal_string(value, digits),
    }


def cmd_prob(args) -> int:
    tj1 = parse_half_integer(args.j1)
    tj2 = parse_half_integer(args.j2)
    tJ = parse_half_integer(args.J)
    tM = parse_half_integer(args.M)
    priors = Priors(n=args.n, tj10=tj1, tj02=tj2, tj12=tJ, tm12=tM)
    table = probability_table(priors)
    rows = []
    for tm1, tm2, p in table:
        row = {
            "n": args.n,
            "j1": format_half_integer(tj1),
            "j2": format_half_integer(tj2),
            "J": format_half_integer(tJ),
            "M": format_half_integer(tM),
            "m1": format_half_integer(tm1),
            "m2": format_half_integer(tm2),
        }
        row.update(_frac_fields("p", p, args.digits))
        rows.append(row)
    _emit(rows, PROB_COLUMNS, args, "prob")
    return EXIT_OK


def cmd_cg(args) -> int:
    tj1 = parse_half_integer(args.j1)
    tj2 = parse_half_integer(args.j2)
    tJ = parse_half_integer(args.J)
    tM = parse_half_integer(args.M)
    if not check_triangle(tj1, tj2, tJ):
        raise InvalidQuantumNumberError(
            "triangle rule violated: |j1 - j2| <= J <= j1 + j2 with integer perimeter"
        )
    if abs(tM) > tJ or (tJ + tM) % 2:
        raise InvalidQuantumNumberError("M must satisfy -J <= M <= J in integer steps")
    rows = []
    for tm1, tm2 in allowed_m_pairs(tj1, tj2, tM):
        value = cg_squared(tj1, tj2, tm1, tm2, tJ, tM)
        row = {
            "j1": format_half_integer(tj1),
            "j2": format_half_integer(tj2),
            "J": format_half_integer(tJ),
            "M": format_half_integer(tM),
            "m1": format_half_integer(tm1),
            "m2": format_half_integer(tm2),
        }
        row.update(_frac_fields("cg2", value, args.digits))
        rows.append(row)
    _emit(rows, CG_COLUMNS, args, "cg")
    return EXIT_OK


def _n_values(args) -> List[int]:
    values = []
    n = args.n_start
    while n <= args.n_max:
        values.append(n)
        n = n * 2 if args.geometric else n + args.step
    return values


def cmd_converge(args) -> int:
    tj1 = parse_half_integer(args.j1)
    tj2 = parse_half_integer(args.j2)
    tJ = parse_half_integer(args.J)
    tM = parse_half_integer(args.M)
    scan_rows, skipped = convergence_scan(tj1, tj2, tJ, tM, _n_values(args))
    for n, reason in skipped:
        print(f"warning: n={n} skipped: {reason}", file=sys.stderr)
    if not scan_rows:
        return _fail(EXIT_CONSTRAINT, "no valid sequence length in the requested range")
    rows = []
    for r in scan_rows:
        row = {
            "n": r.n,
            "j1": format_half_integer(tj1),
            "j2": format_half_integer(tj2),
            "J": format_half_integer(tJ),
            "M": format_half_integer(tM),
            "m1": format_half_integer(r.tm10),
            "m2": format_half_integer(r.tm02),
        }
        row.update(_frac_fields("p", r.p, args.digits))
        row.update(_frac_fields("cg2", r.cg2, args.digits))
        row.update(_frac_fields("delta", r.delta, args.digits))
        rows.append(row)
    _emit(rows, CONVERGE_COLUMNS, args, "converge")
    return EXIT_OK


def cmd_selftest(args) -> int:
    ok = run_selftest(
        seed=args.seed,
        enum_n_max=args.n_max if args.n_max is not None else 6,
        triple_n_max=args.n_max if args.n_max is not None else 64,
    )
    return EXIT_OK if ok else EXIT_SELFTEST


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--digits", type=int, default=6,
                        help="decimal digits for rendered values")


def _add_jjjm(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--j1", required=True, help='half-integer, e.g. "1" or "3/2"')
    parser.add_argument("--j2", required=True)
    parser.add_argument("--J", required=True)
    parser.add_argument("--M", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincorr",
        description="Exact spin-coupling probabilities from sequence correlations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prob", help="path-counting probability table")
    p.add_argument("--n", type=int, required=True, help="sequence length")
    _add_jjjm(p)
    _add_common(p)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("cg", help="exact squared Clebsch-Gordan reference")
    _add_jjjm(p)
    _add_common(p)
    p.set_defaults(func=cmd_cg)

    p = sub.add_parser("converge", help="|P - CG^2| versus sequence length")
    _add_jjjm(p)
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--geometric", action="store_true",
                       help="double n each step")
    group.add_argument("--step", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("selftest", help="run the built-in verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=None,
                   help="cap for enumeration (default 6) and sampling (default 64)")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "step", None) is None and hasattr(args, "step"):
        args.step = 1 if not getattr(args, "geometric", False) else 0
    try:
        return args.func(args)
    except InvalidQuantumNumberError as exc:
        return _fail(EXIT_MALFORMED, str(exc))
    except (ConstraintError, DegeneratePriorsError, BudgetExceededError) as exc:
        return _fail(EXIT_CONSTRAINT, str(exc))


if __name__ == "__main__":
    sys.exit(main())
