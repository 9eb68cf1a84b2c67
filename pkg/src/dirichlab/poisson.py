"""Both sides of the Poisson summation formula on ``[0, m]`` and ``[0, oo)``.

Finite form::

    sum_{n=0}^{m} f(n) = int_0^m f + [f(0) + f(m)]/2
                         + 2 sum_{n>=1} int_0^m f(x) cos(2 pi n x) dx

Letting ``m`` grow, for ``f`` decaying at infinity::

    f(0)/2 + sum_{n>=1} f(n) = int_0^oo f + 2 sum_{n>=1} int_0^oo f(x) cos(2 pi n x) dx

The mode sums are truncated after ``K`` terms and the infinite range is cut at
``X_cut``.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .consts import DEFAULT_DECAY_TOL
from .exceptions import (
    ArgumentError,
    DomainError,
    PreconditionError,
    QuadratureAccuracyError,
)
from .piecewise import PiecewiseFunction
from .quadrature import QuadratureResult, integrate

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PoissonReport:
    """Sum side, integral side and their gap.

    ``mode_integrals`` holds ``int f(x) cos(2 pi n x) dx`` for ``n = 1..K``;
    ``tail_bound`` is twice the magnitude of the last one.
    """

    lhs: float
    rhs: float
    modes_used: int
    tail_cutoff: Optional[float]
    residual: float
    error_estimate: float
    tail_bound: float
    mode_integrals: Tuple[float, ...]

    def __post_init__(self):
        if self.residual < 0:
            raise ArgumentError("Residual must be nonnegative")
        if self.modes_used < 1:
            raise ArgumentError("At least one mode is needed")


def _check_modes(K: int) -> int:
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise ArgumentError("K must be a positive integer, got %r" % (K,))

    return int(K)


def _check_support(f: PiecewiseFunction, upper: float):
    if not f.covers(0.0, upper):
        raise DomainError(
            "Function on [%r, %r] does not cover [0, %r]" % (f.x_lo, f.x_hi, upper)
        )

    if not f.is_continuous_on(0.0, upper):
        raise PreconditionError(
            "Poisson summation needs f continuous on [0, %r]" % upper
        )


def _integral_side(
    f: PiecewiseFunction, upper: float, K: int, tol: float
) -> Tuple[QuadratureResult, List[QuadratureResult]]:
    split = [p.value for p in f.breakpoints if 0.0 < p.value < upper]

    def run(g, hint, label) -> QuadratureResult:
        try:
            return integrate(g, 0.0, upper, tol, hint=hint, split_at=split, label=label)

        except QuadratureAccuracyError as e:
            raise e.relabel(label) from e

    integral = run(f.evaluate, f.max_angular_frequency, "integral")

    modes = []
    for n in range(1, K + 1):
        modes.append(
            run(
                lambda x: f.evaluate(x) * np.cos(TWO_PI * n * x),
                TWO_PI * n + f.max_angular_frequency,
                "mode %d" % n,
            )
        )
        logger.debug("mode %d: %r", n, modes[-1].value)

    return integral, modes


def _report(
    lhs: float,
    head: float,
    integral: QuadratureResult,
    modes: List[QuadratureResult],
    tail_cutoff: Optional[float],
) -> PoissonReport:
    mode_values = tuple(r.value for r in modes)
    rhs = math.fsum([integral.value, head] + [2.0 * v for v in mode_values])
    error = math.fsum(
        [integral.error_estimate] + [2.0 * r.error_estimate for r in modes]
    )

    return PoissonReport(
        lhs=lhs,
        rhs=rhs,
        modes_used=len(modes),
        tail_cutoff=tail_cutoff,
        residual=abs(lhs - rhs),
        error_estimate=error,
        tail_bound=2.0 * abs(mode_values[-1]),
        mode_integrals=mode_values,
    )


def poisson_finite(
    f: PiecewiseFunction,
    m: int,
    K: int,
    tol: float = 1e-10,
    endpoint_correction: bool = True,
) -> PoissonReport:
    """Check the finite Poisson formula on ``[0, m]`` with ``K`` modes.

    Args:
        f: Function continuous on ``[0, m]``.
        m: Positive integer upper limit.
        K: Number of cosine modes.
        tol: Absolute tolerance of each integral.
        endpoint_correction: Add ``[f(0) + f(m)]/2`` to the integral side.
            Without it the residual measures the trapezoidal reading, where
            the endpoint halves are taken to be inside the mode sum.

    Raises:
        PreconditionError: If ``f`` jumps inside ``[0, m]``.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ArgumentError("m must be a positive integer, got %r" % (m,))
    m = int(m)
    K = _check_modes(K)
    _check_support(f, m)

    nodes = f.evaluate(np.arange(m + 1, dtype=float))
    lhs = math.fsum(nodes)
    head = 0.5 * (nodes[0] + nodes[-1]) if endpoint_correction else 0.0

    integral, modes = _integral_side(f, m, K, tol)
    report = _report(lhs, head, integral, modes, None)

    logger.info(
        "finite Poisson on [0, %d], K = %d: residual %.3g", m, K, report.residual
    )
    return report


def poisson_infinite(
    f: PiecewiseFunction,
    K: int,
    X_cut: float = 40.0,
    tol: float = 1e-10,
    decay_tol: float = DEFAULT_DECAY_TOL,
) -> PoissonReport:
    """Check the Poisson formula on ``[0, oo)`` with ``f`` cut at ``X_cut``.

    Raises:
        PreconditionError: If ``|f(X_cut)| > decay_tol``, i.e. ``f`` has not
            decayed by the cutoff.
    """
    K = _check_modes(K)
    X_cut = float(X_cut)
    if not math.isfinite(X_cut) or X_cut < 1:
        raise ArgumentError("Cutoff must be finite and at least 1, got %r" % X_cut)
    _check_support(f, X_cut)

    at_cut = abs(f.evaluate(X_cut))
    if at_cut > decay_tol:
        raise PreconditionError(
            "|f(%r)| = %.3g exceeds the decay threshold %.3g"
            % (X_cut, at_cut, decay_tol)
        )
    if at_cut > 0.1 * decay_tol:
        logger.warning(
            "|f(%r)| = %.3g is close to the decay threshold %.3g",
            X_cut,
            at_cut,
            decay_tol,
        )

    nodes = f.evaluate(np.arange(math.floor(X_cut) + 1, dtype=float))
    lhs = math.fsum([0.5 * nodes[0]] + list(nodes[1:]))

    integral, modes = _integral_side(f, X_cut, K, tol)
    report = _report(lhs, 0.0, integral, modes, X_cut)

    logger.info(
        "infinite Poisson cut at %r, K = %d: residual %.3g", X_cut, K, report.residual
    )
    return report
