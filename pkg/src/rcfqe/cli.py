"""Command-line interface.

Subcommands:
    qe           eliminate all quantifiers from a formula
    eval         evaluate a quantifier-free formula at a rational point
    check-equiv  compare two quantifier-free formulas on a sample grid
    count        count real roots of a univariate polynomial, optionally
                 weighting each root by the sign of a second polynomial

Exit codes: 0 success, 1 usage or input error, 2 timeout, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .formula import eval_qf, is_quantifier_free, max_var
from .mpoly import MPoly
from .parser import ParseError, format_formula, formula_to_dict, parse_formula, parse_poly
from .qe import Trace, qe
from .rmpoly import to_upoly, univariate_in
from .sturm import distinct_root_count, tarski_query
from .upoly import UPoly

DEFAULT_GRID = "-2,-1,-1/2,0,1/2,1,2"
DEFAULT_TIMEOUT = 300.0


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


class _Timeout(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which this interface
    # reserves for timeouts; route usage problems to status 1 instead.
    def error(self, message: str):  # noqa: D102
        raise _UsageError(message)


def _with_timeout(seconds: float, fn: Callable[[], int]) -> int:
    if seconds <= 0:
        return fn()

    def handler(signum, frame):
        raise _Timeout()

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        return fn()
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _split_names(spec: str | None) -> list[str] | None:
    if spec is None:
        return None
    names = [n.strip() for n in spec.split(",") if n.strip()]
    if not names:
        raise _InputError("empty --free list")
    return names


def _parse_point(spec: str) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise _InputError(f"bad assignment {chunk!r}, expected name=value")
        name, _, value = chunk.partition("=")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise _InputError(f"bad value in {chunk!r}: {e}") from None
    return out


def _parse_grid(spec: str) -> list[Fraction]:
    try:
        grid = [Fraction(x.strip()) for x in spec.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise _InputError(f"bad grid: {e}") from None
    if not grid:
        raise _InputError("empty grid")
    return grid


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _to_upoly(p: MPoly, what: str) -> UPoly:
    vars_used = sorted(p.variables())
    if len(vars_used) > 1:
        raise _InputError(f"{what} must be univariate")
    var = vars_used[0] if vars_used else 0
    return to_upoly(univariate_in(p, var), ())


def _cmd_qe(args) -> int:
    f, free = parse_formula(
        args.formula, _split_names(args.free), lock_free=args.free is not None
    )
    trace: Trace | None = [] if args.trace else None
    result = qe(f, trace)
    text = format_formula(result, free)
    if args.format == "text" and trace:
        for event, detail in trace:
            print(f"[{event}] {detail}", file=sys.stderr)
    _emit(
        args,
        {
            "input": args.formula,
            "free": free,
            "result": text,
            "ast": formula_to_dict(result),
            "quantifier_free": is_quantifier_free(result),
            "trace": [f"[{e}] {d}" for e, d in trace] if trace else [],
        },
        text,
    )
    return 0


def _cmd_eval(args) -> int:
    f, free = parse_formula(
        args.formula, _split_names(args.free), lock_free=args.free is not None
    )
    if not is_quantifier_free(f):
        raise _InputError("eval needs a quantifier-free formula; run qe first")
    point = _parse_point(args.at)
    missing = [n for n in free if n not in point]
    if missing:
        raise _InputError(f"missing values for {', '.join(missing)}")
    valuation = tuple(point[n] for n in free)
    value = eval_qf(f, valuation)
    _emit(
        args,
        {"input": args.formula, "free": free, "value": value},
        "true" if value else "false",
    )
    return 0


def _cmd_check_equiv(args) -> int:
    f, free = parse_formula(
        args.left, _split_names(args.free), lock_free=args.free is not None
    )
    g, free = parse_formula(args.right, free, lock_free=args.free is not None)
    if not (is_quantifier_free(f) and is_quantifier_free(g)):
        raise _InputError("check-equiv compares quantifier-free formulas")
    grid = _parse_grid(args.grid)
    from .oracles import sampled_equiv

    same = sampled_equiv(f, g, grid)
    _emit(
        args,
        {
            "left": args.left,
            "right": args.right,
            "free": free[: max(max_var(f), max_var(g)) + 1],
            "grid": [str(x) for x in grid],
            "equivalent": same,
        },
        "equivalent" if same else "different",
    )
    return 0


def _cmd_count(args) -> int:
    p_m, free = parse_poly(args.poly)
    p = _to_upoly(p_m, "the root polynomial")
    if p.is_zero:
        raise _InputError("the root polynomial must be nonzero")
    if args.sign_of is not None:
        q_m, _ = parse_poly(args.sign_of, free)
        q = _to_upoly(q_m, "the sign polynomial")
        value = tarski_query(p, q)
        label = "query"
    else:
        value = distinct_root_count(p)
        label = "roots"
    _emit(args, {"poly": args.poly, label: value}, str(value))
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    sub.add_argument(
        "--timeout",
        type=float,
        default=DEFAULT_TIMEOUT,
        metavar="SECONDS",
        help=f"wall-clock limit, 0 to disable (default {DEFAULT_TIMEOUT:g})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgParser(
        prog="rcfqe",
        description="Exact quantifier elimination over the reals.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    qe_p = subs.add_parser("qe", help="eliminate all quantifiers")
    qe_p.add_argument("formula", help="e.g. 'exists x. x*x + y < 0'")
    qe_p.add_argument("--free", help="comma-separated free variable order")
    qe_p.add_argument(
        "--trace", action="store_true", help="report per-elimination statistics"
    )
    _add_common(qe_p)
    qe_p.set_defaults(func=_cmd_qe)

    ev = subs.add_parser("eval", help="evaluate a quantifier-free formula")
    ev.add_argument("formula")
    ev.add_argument("--at", required=True, help="point, e.g. 'x=1,y=-2/3'")
    ev.add_argument("--free", help="comma-separated free variable order")
    _add_common(ev)
    ev.set_defaults(func=_cmd_eval)

    ce = subs.add_parser(
        "check-equiv", help="compare two quantifier-free formulas on a grid"
    )
    ce.add_argument("left")
    ce.add_argument("right")
    ce.add_argument("--free", help="comma-separated free variable order")
    ce.add_argument("--grid", default=DEFAULT_GRID, help="comma-separated values")
    _add_common(ce)
    ce.set_defaults(func=_cmd_check_equiv)

    ct = subs.add_parser("count", help="count real roots of a univariate polynomial")
    ct.add_argument("poly", help="e.g. 'x^3 - 2*x'")
    ct.add_argument(
        "--sign-of",
        help="sum the sign of this polynomial over the roots instead",
    )
    _add_common(ct)
    ct.set_defaults(func=_cmd_count)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"rcfqe: {e}", file=sys.stderr)
        return 1
    try:
        return _with_timeout(args.timeout, lambda: args.func(args))
    except _Timeout:
        print("rcfqe: timed out", file=sys.stderr)
        return 2
    except (_InputError, _UsageError, ParseError) as e:
        print(f"rcfqe: {e}", file=sys.stderr)
        return 1
    except Exception as e:  # noqa: BLE001  (includes InvariantViolation)
        print(f"rcfqe: internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
