"""Convergence sweeps and the CSV tables the command line prints."""

import csv
import io
import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..consts import KERNEL_SPLIT, LEFT, RIGHT, SERIES, Method
from ..dirichlet import DecayFit, LimitEstimate, decay_fit
from ..exceptions import ArgumentError
from ..fourier import (
    TWO_PI,
    FourierCoefficients,
    PartialSumResult,
    endpoint_sum,
    fourier_coefficients,
    partial_sum,
    require_full_period,
)
from ..funcdsl import parse_function
from ..piecewise import PiecewiseFunction, PointLike, point_value
from ..poisson import PoissonReport

logger = logging.getLogger(__name__)

HEADER = ("n", "value", "target", "abs_error")
_METHODS = ("series", "kernel_raw", "kernel_split", "periodic")


class ConvergenceRow(NamedTuple):
    n: int
    value: float
    target: float
    abs_error: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Partial sums ``s_n(x)`` against their target, ascending in ``n``."""

    rows: Tuple[ConvergenceRow, ...]
    fitted_rate: float
    method: Method
    x: float

    def __post_init__(self):
        rows = tuple(ConvergenceRow(*row) for row in self.rows)
        object.__setattr__(self, "rows", rows)

        if any(a.n >= b.n for a, b in zip(rows, rows[1:])):
            raise ArgumentError("Rows must be strictly ascending in n")
        if any(row.abs_error != abs(row.value - row.target) for row in rows):
            raise ArgumentError("abs_error must equal |value - target|")
        if self.method not in _METHODS:
            raise ArgumentError("Unknown method %r" % (self.method,))


def format_float(value: float) -> str:
    """17 significant digits, enough to read the same float back."""
    return "%.17g" % value


def fit_rate(rows: Sequence[ConvergenceRow]) -> float:
    """Slope of ``log|error|`` against ``log n`` over the largest decade of ``n``.

    Rows with zero error are left out; ``nan`` if fewer than two remain.
    """
    if not rows:
        return math.nan

    top = max(row.n for row in rows)
    decade = [row for row in rows if row.n > 0 and 10 * row.n >= top]
    return decay_fit([r.n for r in decade], [r.abs_error for r in decade]).exponent


def auto_target(f: PiecewiseFunction, x: PointLike) -> float:
    """Mean of the one-sided limits at ``x``, wrapping around at ``0`` and ``2pi``."""
    require_full_period(f)
    value = point_value(x)

    if math.isclose(value, 0.0, abs_tol=1e-12) or math.isclose(value, TWO_PI):
        start = f.one_sided_limits(0)[1]
        end = f.one_sided_limits(f.x_hi)[0]
        assert start is not None and end is not None
        return 0.5 * (start + end)

    left, right = f.one_sided_limits(x)
    assert left is not None and right is not None
    return 0.5 * (left + right)


def evaluate_partial_sum(
    f: PiecewiseFunction,
    n: int,
    x: PointLike,
    method: Method,
    tol: float,
    coefficients: Optional[FourierCoefficients] = None,
) -> PartialSumResult:
    """``partial_sum``, with ``kernel_split`` at ``0`` or ``2pi`` going to
    ``endpoint_sum``."""
    if method == KERNEL_SPLIT:
        value = point_value(x)
        if value <= 0.0:
            return endpoint_sum(f, n, LEFT, tol)
        if value >= TWO_PI:
            return endpoint_sum(f, n, RIGHT, tol)

    return partial_sum(f, n, x, method, tol, coefficients)


def run_sweep(
    func_spec: Union[str, PiecewiseFunction],
    x: PointLike,
    n_list: Sequence[int],
    method: Method = SERIES,
    target: Optional[float] = None,
    tol: float = 1e-8,
) -> ConvergenceReport:
    """Tabulate ``s_n(x)`` for every ``n`` in ``n_list``.

    Args:
        func_spec: Function spec text or a parsed function on ``[0, 2pi]``.
        x: Evaluation point.
        n_list: Nonempty, strictly ascending orders.
        method: Partial-sum construction.
        target: Value to measure errors against; ``None`` takes the mean of
            the one-sided limits at ``x``.
        tol: Quadrature tolerance.
    """
    f = parse_function(func_spec) if isinstance(func_spec, str) else func_spec
    n_list = list(n_list)
    if not n_list:
        raise ArgumentError("n_list must not be empty")
    if any(a >= b for a, b in zip(n_list, n_list[1:])):
        raise ArgumentError("n_list must be strictly ascending")

    if target is None:
        target = auto_target(f, x)

    coefficients = None
    if method == SERIES:
        coefficients = fourier_coefficients(f, max(n_list[-1], 1), tol)

    rows = []
    for n in n_list:
        result = evaluate_partial_sum(f, n, x, method, tol, coefficients)
        rows.append(
            ConvergenceRow(n, result.value, target, abs(result.value - target))
        )
        logger.debug("s_%d(%r) = %r", n, point_value(x), result.value)

    return ConvergenceReport(tuple(rows), fit_rate(rows), method, point_value(x))


def _table(
    header: Iterable[str],
    rows: Iterable[Iterable[str]],
    metadata: Iterable[Tuple[str, str]],
) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)

    for key, value in metadata:
        buffer.write("# %s=%s\n" % (key, value))

    return buffer.getvalue()


def emit_csv(report: ConvergenceReport) -> str:
    return _table(
        HEADER,
        (
            (str(row.n),) + tuple(format_float(v) for v in row[1:])
            for row in report.rows
        ),
        [
            ("method", report.method),
            ("x", format_float(report.x)),
            ("fitted_rate", format_float(report.fitted_rate)),
        ],
    )


def parse_csv(text: str) -> ConvergenceReport:
    """Read back the output of ``emit_csv``."""
    metadata = {}
    lines: List[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            metadata[key] = value
        elif line.strip():
            lines.append(line)

    records = list(csv.reader(lines))
    if not records or tuple(records[0]) != HEADER:
        raise ArgumentError("Missing header %s" % ",".join(HEADER))

    for key in ("method", "x", "fitted_rate"):
        if key not in metadata:
            raise ArgumentError("Missing metadata line %r" % key)

    try:
        rows = tuple(
            ConvergenceRow(int(n), float(value), float(target), float(error))
            for n, value, target, error in records[1:]
        )
        return ConvergenceReport(
            rows,
            float(metadata["fitted_rate"]),
            metadata["method"],  # type: ignore[arg-type]
            float(metadata["x"]),
        )

    except ValueError as e:
        raise ArgumentError("Malformed convergence table: %s" % e) from e


def emit_coefficients(c: FourierCoefficients) -> str:
    b = (0.0,) + c.b
    return _table(
        ("k", "a_k", "b_k"),
        (
            (str(k), format_float(c.a[k]), format_float(b[k]))
            for k in range(c.K + 1)
        ),
        [("K", str(c.K)), ("tol", format_float(c.coefficient_tol))],
    )


def emit_partial_sum(result: PartialSumResult) -> str:
    return _table(
        ("n", "x", "value", "method", "error_estimate"),
        [
            (
                str(result.n),
                format_float(result.x),
                format_float(result.value),
                result.method,
                format_float(result.error_estimate),
            )
        ],
        [],
    )


def emit_limit_estimate(estimate: LimitEstimate, label: str) -> str:
    return _table(
        ("N", "value"),
        ((str(N), format_float(v)) for N, v in estimate.window_values),
        [
            ("range", label),
            ("window", str(estimate.window)),
            ("estimate", format_float(estimate.estimate)),
            ("predicted", format_float(estimate.predicted)),
            ("spread", format_float(estimate.spread)),
        ],
    )


def emit_decay(fit: DecayFit) -> str:
    return _table(
        ("N", "value"),
        ((str(N), format_float(v)) for N, v in zip(fit.N_values, fit.values)),
        [
            ("exponent", format_float(fit.exponent)),
            ("constant", format_float(fit.constant)),
        ],
    )


def emit_poisson(report: PoissonReport) -> str:
    cutoff = "" if report.tail_cutoff is None else format_float(report.tail_cutoff)
    return _table(
        ("n", "mode_integral"),
        (
            (str(n), format_float(v))
            for n, v in enumerate(report.mode_integrals, start=1)
        ),
        [
            ("lhs", format_float(report.lhs)),
            ("rhs", format_float(report.rhs)),
            ("residual", format_float(report.residual)),
            ("error_estimate", format_float(report.error_estimate)),
            ("tail_bound", format_float(report.tail_bound)),
            ("modes_used", str(report.modes_used)),
            ("tail_cutoff", cutoff),
        ],
    )

