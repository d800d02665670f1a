"""Command line interface.

Commands::

    tracecount count FILE      real/complex solution counts (+ sign conditions)
    tracecount hermite EXPR    distinct real roots of a univariate polynomial
    tracecount signature FILE  inertia of a symmetric rational matrix
    tracecount shape FILE      shape basis (lex, shearing the last coordinate)
    tracecount verify FILE     trace-form counts cross-checked by Sturm chains
    tracecount groebner FILE   reduced Groebner basis

FILE is a system file (see the parser module) or ``-`` for stdin; the
signature command instead takes a matrix file.  Exit codes: 0 success (for
verify: all counts agree), 1 malformed input, 2 system not zero-dimensional,
3 internal consistency failure, 4 oracle/shape reduction not applicable,
5 verify found a disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .count import (
    ShapeError,
    count_with_general_position,
    hermite_count,
    shape_with_shears,
)
from .groebner import NotZeroDimensionalError, buchberger
from .oracle import OracleInapplicableError, oracle_count_system
from .parser import ParseError, parse_matrix, parse_system, parse_univariate
from .poly import degrevlex_order, format_polynomial, lex_order
from .quadform import (
    InternalConsistencyError,
    SymMatrix,
    checked_type,
    definiteness,
    hurwitz_type,
)
from .rational import format_rational, parse_rational


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _order_for(name, context):
    return lex_order(context) if name == "lex" else degrevlex_order(context)


def _add_input(sub):
    sub.add_argument("file", help="input file, or - for stdin")


def _add_shear_flags(sub):
    sub.add_argument("--t", default=None, help="fixed shear parameter (rational) instead of the 1, 2, .. schedule")
    sub.add_argument("--max-trials", type=int, default=8, help="shear attempts before giving up (default 8)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tracecount",
        description="Count real and complex solutions of polynomial systems exactly, "
        "via trace-form signatures.",
        epilog="exit codes: 1 bad input, 2 not zero-dimensional, "
        "3 internal consistency failure, 4 shape/oracle not applicable, "
        "5 verification disagreement",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count real solutions, optionally split by sign conditions")
    _add_input(p)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--order", choices=("lex", "degrevlex"), default="degrevlex")
    _add_shear_flags(p)

    p = sub.add_parser("hermite", help="count distinct real roots of a univariate polynomial")
    p.add_argument("expr", help="polynomial expression, e.g. 'x^3 - x'")

    p = sub.add_parser("signature", help="inertia of a symmetric matrix from a matrix file")
    _add_input(p)

    p = sub.add_parser("shape", help="lex shape basis of a radical zero-dimensional system")
    _add_input(p)
    _add_shear_flags(p)

    p = sub.add_parser("verify", help="cross-check trace-form counts against the Sturm oracle")
    _add_input(p)
    _add_shear_flags(p)

    p = sub.add_parser("groebner", help="reduced Groebner basis of the system")
    _add_input(p)
    p.add_argument("--order", choices=("lex", "degrevlex"), default="degrevlex")
    return ap


def _cmd_count(args) -> int:
    parsed = parse_system(_read(args.file))
    t = parse_rational(args.t) if args.t is not None else None
    report = count_with_general_position(
        parsed.system,
        parsed.h_polys,
        order=_order_for(args.order, parsed.context),
        t=t,
        max_trials=args.max_trials,
    )
    if args.json:
        payload = {
            "total_real": report.total_real,
            "dim_algebra": report.dim_algebra,
            "distinct_complex": report.distinct_complex,
            "h_counts": [
                {
                    "h": format_polynomial(hc.h),
                    "pos": hc.pos,
                    "neg": hc.neg,
                    "zero": hc.zero,
                }
                for hc in report.h_counts
            ],
            "general_position_t": None
            if report.general_position_t is None
            else format_rational(report.general_position_t),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"total real solutions: {report.total_real}")
    print(f"algebra dimension: {report.dim_algebra}")
    print(f"distinct complex solutions: {report.distinct_complex}")
    for hc in report.h_counts:
        print(
            f"H = {format_polynomial(hc.h)}: pos {hc.pos}, neg {hc.neg}, zero {hc.zero}"
        )
    if report.general_position_t is not None:
        print(f"general position shear: t = {format_rational(report.general_position_t)}")
    elif report.shape is not None:
        print("general position shear: none needed")
    else:
        print(f"shape basis unavailable: {report.shape_failure}")
    return 0


def _cmd_hermite(args) -> int:
    g = parse_univariate(args.expr)
    res = hermite_count(g)
    print(f"distinct real roots: {res.real_roots}")
    print(f"conjugate pairs: {res.conjugate_pairs}")
    print(f"trace form type: {res.form_type}")
    print(f"rank: {res.form_type.rank}")
    print(f"algebra dimension: {res.dim}")
    return 0


def _cmd_signature(args) -> int:
    matrix = SymMatrix(parse_matrix(_read(args.file)))
    ty = checked_type(matrix)
    print(f"type: {ty}")
    print(f"rank: {ty.rank}")
    print(f"signature: {ty.signature}")
    print(f"definiteness: {definiteness(matrix)}")
    hw = hurwitz_type(matrix)
    print(f"hurwitz: {hw}" if hw is not None else "hurwitz: not applicable")
    return 0


def _cmd_shape(args) -> int:
    parsed = parse_system(_read(args.file))
    t = parse_rational(args.t) if args.t is not None else None
    shape, t_used = shape_with_shears(parsed.system, t=t, max_trials=args.max_trials)
    print("shear: none" if t_used is None else f"shear: t = {format_rational(t_used)}")
    for i, expr in enumerate(shape.coordinate_exprs):
        print(f"{shape.context.names[i]} = {format_polynomial(expr)}")
    print(f"minimal polynomial: {format_polynomial(shape.minimal_polynomial)}")
    return 0


def _cmd_verify(args) -> int:
    parsed = parse_system(_read(args.file))
    t = parse_rational(args.t) if args.t is not None else None
    report = count_with_general_position(
        parsed.system, parsed.h_polys, t=t, max_trials=args.max_trials
    )
    ok = True

    oracle_total = oracle_count_system(
        parsed.system, None, t=t, max_trials=args.max_trials
    ).total_real
    agree = report.total_real == oracle_total
    ok &= agree
    print(
        f"total real: trace form {report.total_real}, oracle {oracle_total} -> "
        + ("agree" if agree else "DISAGREE")
    )
    for hc in report.h_counts:
        oc = oracle_count_system(parsed.system, hc.h, t=t, max_trials=args.max_trials)
        agree = (hc.pos, hc.neg, hc.zero) == (oc.pos, oc.neg, oc.zero)
        ok &= agree
        print(
            f"H = {format_polynomial(hc.h)}: trace form ({hc.pos}, {hc.neg}, {hc.zero}), "
            f"oracle ({oc.pos}, {oc.neg}, {oc.zero}) -> "
            + ("agree" if agree else "DISAGREE")
        )
    print("verdict: all counts agree" if ok else "verdict: DISAGREEMENT")
    return 0 if ok else 5


def _cmd_groebner(args) -> int:
    parsed = parse_system(_read(args.file))
    gb = buchberger(parsed.system, _order_for(args.order, parsed.context))
    for g in gb:
        print(format_polynomial(g, gb.order))
    return 0


_HANDLERS = {
    "count": _cmd_count,
    "hermite": _cmd_hermite,
    "signature": _cmd_signature,
    "shape": _cmd_shape,
    "verify": _cmd_verify,
    "groebner": _cmd_groebner,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except NotZeroDimensionalError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalConsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OracleInapplicableError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except ShapeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (ParseError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
