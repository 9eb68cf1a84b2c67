"""``dirichlab`` command line.

Every subcommand prints a CSV table on stdout (or to ``--out``); diagnostics
go to stderr. Exit status is 0 on success, 1 for usage, spec or argument
errors and 2 when an integral cannot be computed.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, NoReturn, Optional

from ..consts import KERNEL_RAW, KERNEL_SPLIT, PERIODIC, SERIES, Method
from ..dirichlet import RangeSpec, cot_sweep, limit_sweep, riemann_lebesgue_sweep
from ..exceptions import ArgumentError, DirichlabError, NumericalError
from ..fourier import fourier_coefficients
from ..funcdsl import parse_bound, parse_function
from ..poisson import poisson_finite, poisson_infinite
from .report import (
    emit_coefficients,
    emit_csv,
    emit_decay,
    emit_limit_estimate,
    emit_partial_sum,
    emit_poisson,
    evaluate_partial_sum,
    run_sweep,
)

logger = logging.getLogger(__name__)

METHOD_ALIASES: Dict[str, Method] = {
    "series": SERIES,
    "kernel": KERNEL_RAW,
    "kernel_raw": KERNEL_RAW,
    "split": KERNEL_SPLIT,
    "kernel_split": KERNEL_SPLIT,
    "periodic": PERIODIC,
}


class ArgumentParser(argparse.ArgumentParser):
    """``argparse`` parser exiting with status 1 on usage errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def parse_n_list(text: str) -> List[int]:
    """``lo:hi`` or ``lo:hi:step`` (both ends included), or ``a,b,c``."""
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError(text)

            lo, hi = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else 1
            if step < 1 or hi < lo:
                raise ValueError(text)

            return list(range(lo, hi + 1, step))

        return [int(p) for p in text.split(",")]

    except ValueError as e:
        raise ArgumentError("Invalid order list %r" % text) from e


def parse_range(text: str) -> RangeSpec:
    """``interior:A``, ``fullpi``, ``multipi:M`` or ``nodes:M``."""
    kind, _, value = text.partition(":")
    kind = kind.replace("_", "")

    try:
        if kind == "interior" and value:
            return RangeSpec.interior(parse_bound(value))
        if kind == "fullpi" and not value:
            return RangeSpec.full_pi()
        if kind == "multipi" and value:
            return RangeSpec.multi_pi(int(value))
        if kind in ("nodes", "unitnodes") and value:
            return RangeSpec.unit_nodes(int(value))

    except ValueError as e:
        raise ArgumentError("Invalid range %r" % text) from e

    raise ArgumentError("Invalid range %r" % text)


def _method(text: str) -> Method:
    try:
        return METHOD_ALIASES[text]

    except KeyError as e:
        raise ArgumentError("Unknown method %r" % text) from e


def _coeffs(args: argparse.Namespace) -> str:
    f = parse_function(args.func)
    return emit_coefficients(fourier_coefficients(f, args.max_k, args.tol))


def _partial_sum(args: argparse.Namespace) -> str:
    f = parse_function(args.func)
    result = evaluate_partial_sum(
        f, args.n, parse_bound(args.x), _method(args.method), args.tol
    )
    return emit_partial_sum(result)


def _sweep(args: argparse.Namespace) -> str:
    target = None
    if args.target != "auto":
        try:
            target = float(args.target)
        except ValueError as e:
            raise ArgumentError("Invalid target %r" % args.target) from e

    report = run_sweep(
        args.func,
        parse_bound(args.x),
        parse_n_list(args.n_list),
        _method(args.method),
        target,
        args.tol,
    )
    return emit_csv(report)


def _dirichlet(args: argparse.Namespace) -> str:
    f = parse_function(args.func)
    estimate = limit_sweep(
        f, parse_range(args.range), args.N_start, args.window, args.tol
    )
    return emit_limit_estimate(estimate, args.range)


def _poisson(args: argparse.Namespace) -> str:
    f = parse_function(args.func)
    if args.infinite:
        report = poisson_infinite(f, args.modes, args.cut, args.tol)
    else:
        report = poisson_finite(f, args.m, args.modes, args.tol)

    return emit_poisson(report)


def _rl_check(args: argparse.Namespace) -> str:
    f = parse_function(args.func)
    fit = riemann_lebesgue_sweep(
        f, parse_bound(args.a), parse_n_list(args.N_list), args.tol
    )
    return emit_decay(fit)


def _cot(args: argparse.Namespace) -> str:
    f = parse_function(args.func)
    estimate = cot_sweep(f, parse_bound(args.a), args.N_start, args.window, args.tol)
    return emit_limit_estimate(estimate, "cot:%s" % args.a)


def make_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="dirichlab",
        description="Fourier partial sums and Dirichlet integrals.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug"
    )

    common = ArgumentParser(add_help=False)
    common.add_argument("--func", required=True, help="Function spec text")
    common.add_argument("--out", default=None, help="Write the CSV here, not stdout")

    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], str], **kwargs):
        sub = commands.add_parser(name, parents=[common], **kwargs)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("coeffs", _coeffs, help="Fourier coefficients a_k, b_k")
    sub.add_argument("--max-k", type=int, default=32)
    sub.add_argument("--tol", type=float, default=1e-9)

    sub = command("partial-sum", _partial_sum, help="One partial sum s_n(x)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--x", required=True)
    sub.add_argument("--method", choices=sorted(METHOD_ALIASES), default="series")
    sub.add_argument("--tol", type=float, default=1e-8)

    sub = command("sweep", _sweep, help="s_n(x) over a list of n")
    sub.add_argument("--x", required=True)
    sub.add_argument("--n-list", required=True, help="lo:hi[:step] or a,b,c")
    sub.add_argument("--method", choices=sorted(METHOD_ALIASES), default="series")
    sub.add_argument("--target", default="auto")
    sub.add_argument("--tol", type=float, default=1e-8)

    sub = command("dirichlet", _dirichlet, help="Windowed Dirichlet integral limit")
    sub.add_argument(
        "--range", required=True, help="interior:A, fullpi, multipi:M or nodes:M"
    )
    sub.add_argument("--N-start", type=int, default=200)
    sub.add_argument("--window", type=int, default=8)
    sub.add_argument("--tol", type=float, default=1e-8)

    sub = command("poisson", _poisson, help="Poisson summation residual")
    span = sub.add_mutually_exclusive_group(required=True)
    span.add_argument("--m", type=int)
    span.add_argument("--infinite", action="store_true")
    sub.add_argument("--cut", type=float, default=40.0)
    sub.add_argument("--modes", type=int, required=True)
    sub.add_argument("--tol", type=float, default=1e-10)

    sub = command("rl-check", _rl_check, help="Riemann-Lebesgue decay table")
    sub.add_argument("--a", required=True)
    sub.add_argument("--N-list", required=True, help="lo:hi[:step] or a,b,c")
    sub.add_argument("--tol", type=float, default=1e-10)

    sub = command("cot", _cot, help="Windowed cot-variant integral limit")
    sub.add_argument("--a", required=True)
    sub.add_argument("--N-start", type=int, default=200)
    sub.add_argument("--window", type=int, default=8)
    sub.add_argument("--tol", type=float, default=1e-8)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )

    try:
        text = args.handler(args)

    except NumericalError as e:
        logger.error("%s", e)
        return 2

    except DirichlabError as e:
        logger.error("%s", e)
        return 1

    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as out:
            out.write(text)
        logger.info("wrote %s", args.out)

    return 0
