"""Dirichlet kernel, Fourier coefficients and partial sums on ``[0, 2pi]``.

Four constructions of the partial sum ``s_n(x)`` are provided:

- ``series``: ``a_0/2 + sum(a_k cos kx + b_k sin kx)`` from the coefficients;
- ``kernel_raw``: ``(1/pi) * int_0^{2pi} f(t) D_n(t - x) dt``;
- ``kernel_split``: the same integral cut at ``x`` and folded onto
  ``D_n(2v)``, which never looks outside ``[0, 2pi]``;
- ``periodic``: the symmetric form that evaluates ``f`` through its
  ``2pi``-periodic extension.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .consts import (
    KERNEL_RAW,
    KERNEL_SPLIT,
    LEFT,
    MAX_ORDER,
    PERIODIC,
    RIGHT,
    SERIES,
    SINGULARITY_EPS,
    End,
    Method,
)
from .exceptions import (
    ArgumentError,
    DomainError,
    EvaluationError,
    QuadratureAccuracyError,
)
from .piecewise import Bound, PiecewiseFunction, PointLike, point_value
from .quadrature import QuadratureResult, integrate

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
SERIES_CUTOFF = 1e-3


def _sin_ratio(m: float, z: np.ndarray) -> np.ndarray:
    """``sin(m*z) / sin(z)`` for ``|z|`` below the singularity threshold.

    The series is used while ``|m*z|`` stays below ``SERIES_CUTOFF``; beyond
    it the reduced offset ``z`` is divided through directly.
    """
    mz = m * z
    small = np.abs(mz) < SERIES_CUTOFF
    safe = np.where(small, 1.0, z)
    mz2 = mz * mz
    z2 = z * z
    numerator = 1.0 - mz2 / 6.0 + mz2 * mz2 / 120.0
    denominator = 1.0 - z2 / 6.0 + z2 * z2 / 120.0
    direct = np.sin(m * safe) / np.sin(safe)
    return np.where(small, m * numerator / denominator, direct)


def check_order(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or not 0 <= n <= MAX_ORDER:
        raise ArgumentError(
            "Order must be an integer in [0, %d], got %r" % (MAX_ORDER, n)
        )

    return int(n)


def dirichlet_kernel(n: int, u):
    """``D_n(u) = sin((2n+1)u/2) / (2 sin(u/2))``, continuous at multiples of 2pi.

    Accepts a float or an array of points.
    """
    n = check_order(n)
    m = 2 * n + 1

    us = np.atleast_1d(np.asarray(u, dtype=float))
    half = 0.5 * us
    denominator = np.sin(half)
    near = np.abs(denominator) < SINGULARITY_EPS

    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.sin(m * half) / (2.0 * denominator)

    if np.any(near):
        d = us[near] - TWO_PI * np.rint(us[near] / TWO_PI)
        # The sign (-1)^(k(m-1)) is +1 for odd m.
        value[near] = 0.5 * _sin_ratio(m, 0.5 * d)

    return float(value[0]) if np.ndim(u) == 0 else value.reshape(np.shape(u))


def dirichlet_ratio(mu: float, x):
    """``sin(mu*x) / sin(x)`` with removable points filled in.

    At ``x = k*pi`` the value is ``mu*cos(mu*k*pi)/cos(k*pi)``, which needs an
    integer ``mu`` unless ``k = 0``.

    Raises:
        EvaluationError: At a non-removable singularity.
    """
    mu = float(mu)
    if not mu > 0 or not math.isfinite(mu):
        raise ArgumentError("Frequency must be positive, got %r" % mu)

    xs = np.atleast_1d(np.asarray(x, dtype=float))
    k = np.rint(xs / math.pi)
    d = xs - k * math.pi
    near = np.abs(d) < SINGULARITY_EPS

    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.sin(mu * xs) / np.sin(xs)

    if np.any(near):
        k_near = k[near]
        if mu.is_integer():
            parity = np.mod(k_near * (mu + 1.0), 2.0)
            sign = 1.0 - 2.0 * parity
        elif np.any(k_near != 0):
            bad = xs[near][k_near != 0][0]
            raise EvaluationError(
                "sin(%r*x)/sin(x) has a non-removable singularity at x = %r" % (mu, bad)
            )
        else:
            sign = np.ones_like(k_near)

        value[near] = sign * _sin_ratio(mu, d[near])

    return float(value[0]) if np.ndim(x) == 0 else value.reshape(np.shape(x))


@dataclass(frozen=True)
class FourierCoefficients:
    """``a_0..a_K`` and ``b_1..b_K`` of a function on ``[0, 2pi]``."""

    a: Tuple[float, ...]
    b: Tuple[float, ...]
    K: int
    coefficient_tol: float

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))

        if self.K < 1 or len(self.a) != self.K + 1 or len(self.b) != self.K:
            raise ArgumentError("Coefficient lists do not match K = %r" % self.K)
        if not all(math.isfinite(v) for v in self.a + self.b):
            raise ArgumentError("Coefficients must be finite")


@dataclass(frozen=True)
class PartialSumResult:
    x: float
    n: int
    value: float
    method: Method
    error_estimate: float


def require_full_period(f: PiecewiseFunction):
    if not f.has_domain(0, Bound(2, pi=True)):
        raise DomainError(
            "Function must be defined on [0, 2pi], not [%r, %r]" % (f.x_lo, f.x_hi)
        )


def _integrate(g, a, b, tol, hint, split_at, label) -> QuadratureResult:
    try:
        return integrate(g, a, b, tol, hint=hint, split_at=split_at, label=label)

    except QuadratureAccuracyError as e:
        raise e.relabel(label) from e


def fourier_coefficients(
    f: PiecewiseFunction, K: int, tol: float = 1e-10
) -> FourierCoefficients:
    """Compute ``a_k = (1/pi) int f cos kt`` and ``b_k = (1/pi) int f sin kt``.

    Each coefficient is accurate to ``tol``.

    Raises:
        DomainError: If ``f`` is not defined on ``[0, 2pi]``.
        QuadratureAccuracyError: Naming the coefficient that failed.
    """
    require_full_period(f)
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise ArgumentError("K must be a positive integer, got %r" % K)

    split = [p.value for p in f.breakpoints]
    a: List[float] = []
    b: List[float] = []

    for k in range(K + 1):
        hint = k + f.max_angular_frequency

        result = _integrate(
            lambda t: f.evaluate(t) * np.cos(k * t),
            0.0,
            TWO_PI,
            tol * math.pi,
            hint,
            split,
            "a_%d" % k,
        )
        a.append(result.value / math.pi)

        if k:
            result = _integrate(
                lambda t: f.evaluate(t) * np.sin(k * t),
                0.0,
                TWO_PI,
                tol * math.pi,
                hint,
                split,
                "b_%d" % k,
            )
            b.append(result.value / math.pi)

        logger.debug("coefficient %d of %d done", k, K)

    return FourierCoefficients(tuple(a), tuple(b), int(K), tol)


def partial_sum_series(
    c: FourierCoefficients, n: int, x: PointLike
) -> PartialSumResult:
    """Evaluate ``s_n(x)`` from precomputed coefficients."""
    n = check_order(n)
    if n > c.K:
        raise ArgumentError("Order %d exceeds the %d available coefficients" % (n, c.K))

    x = point_value(x)
    k = np.arange(1, n + 1)
    a = np.asarray(c.a[1 : n + 1])
    b = np.asarray(c.b[:n])
    terms = a * np.cos(k * x) + b * np.sin(k * x)
    value = math.fsum([0.5 * c.a[0]] + list(terms))

    return PartialSumResult(x, n, value, SERIES, 0.0)


def partial_sum_kernel_raw(
    f: PiecewiseFunction, n: int, x: PointLike, tol: float = 1e-8
) -> PartialSumResult:
    """``s_n(x) = (1/pi) int_0^{2pi} f(t) D_n(t - x) dt``, no periodic extension."""
    require_full_period(f)
    n = check_order(n)
    x = point_value(x)
    if not 0.0 <= x <= TWO_PI:
        raise DomainError("x = %r outside [0, 2pi]" % x)

    split = [p.value for p in f.breakpoints] + [x]
    result = _integrate(
        lambda t: f.evaluate(t) * dirichlet_kernel(n, t - x),
        0.0,
        TWO_PI,
        tol * math.pi,
        n + 0.5 + f.max_angular_frequency,
        split,
        "kernel_raw s_%d(%r)" % (n, x),
    ).scaled(1.0 / math.pi)

    return PartialSumResult(x, n, result.value, KERNEL_RAW, result.error_estimate)


def _kernel_2v(n: int):
    return lambda v: dirichlet_kernel(n, 2.0 * v)


def partial_sum_kernel_split(
    f: PiecewiseFunction, n: int, x: PointLike, tol: float = 1e-8
) -> PartialSumResult:
    """The periodicity-free form::

        s_n(x) = (2/pi) int_0^{x/2} f(x - 2v) D_n(2v) dv
               + (2/pi) int_0^{(2pi - x)/2} f(x + 2v) D_n(2v) dv

    Raises:
        ArgumentError: If ``x`` is not strictly inside ``(0, 2pi)``; use
            ``endpoint_sum`` there.
    """
    require_full_period(f)
    n = check_order(n)
    x = point_value(x)
    if not 0.0 < x < TWO_PI:
        raise ArgumentError("x = %r must lie in (0, 2pi); use endpoint_sum" % x)

    kernel = _kernel_2v(n)
    hint = 2 * n + 1 + 2 * f.max_angular_frequency
    breakpoints = [p.value for p in f.breakpoints]

    below = _integrate(
        lambda v: f.evaluate(x - 2.0 * v) * kernel(v),
        0.0,
        0.5 * x,
        0.25 * tol * math.pi,
        hint,
        [0.5 * (x - p) for p in breakpoints if p < x],
        "kernel_split s_%d(%r) below x" % (n, x),
    )
    above = _integrate(
        lambda v: f.evaluate(x + 2.0 * v) * kernel(v),
        0.0,
        0.5 * (TWO_PI - x),
        0.25 * tol * math.pi,
        hint,
        [0.5 * (p - x) for p in breakpoints if p > x],
        "kernel_split s_%d(%r) above x" % (n, x),
    )
    result = (below + above).scaled(2.0 / math.pi)

    return PartialSumResult(x, n, result.value, KERNEL_SPLIT, result.error_estimate)


def _periodic_splits(points: Sequence[float], x: float) -> List[float]:
    """Offsets ``t`` in ``(0, pi)`` where ``x + t`` or ``x - t`` hits a point
    modulo 2pi."""
    splits = set()
    for p in points:
        for t in ((p - x) % TWO_PI, (x - p) % TWO_PI):
            if 0.0 < t < math.pi:
                splits.add(t)

    return sorted(splits)


def partial_sum_periodic(
    f: PiecewiseFunction, n: int, x: PointLike, tol: float = 1e-8
) -> PartialSumResult:
    """``s_n(x) = (2/pi) int_0^pi (g(x+t) + g(x-t))/2 D_n(t) dt`` where ``g``
    is the ``2pi``-periodic extension of ``f``."""
    require_full_period(f)
    n = check_order(n)
    x = point_value(x)
    g = f.periodic_extension(TWO_PI)

    # Both domain ends become the same jump of the extension.
    points = [f.x_lo] + [p.value for p in f.breakpoints]
    result = _integrate(
        lambda t: 0.5 * (g(x + t) + g(x - t)) * dirichlet_kernel(n, t),
        0.0,
        math.pi,
        0.5 * tol * math.pi,
        n + 0.5 + f.max_angular_frequency,
        _periodic_splits(points, x),
        "periodic s_%d(%r)" % (n, x),
    ).scaled(2.0 / math.pi)

    return PartialSumResult(x, n, result.value, PERIODIC, result.error_estimate)


def endpoint_sum(
    f: PiecewiseFunction, n: int, end: End, tol: float = 1e-8
) -> PartialSumResult:
    """``s_n`` at ``x = 0`` (``left``) or ``x = 2pi`` (``right``)::

        s_n(0)   = (2/pi) int_0^pi f(2v) D_n(2v) dv
        s_n(2pi) = (2/pi) int_0^pi f(2pi - 2v) D_n(2v) dv
    """
    require_full_period(f)
    n = check_order(n)
    kernel = _kernel_2v(n)
    breakpoints = [p.value for p in f.breakpoints]

    if end == LEFT:
        x = 0.0
        g = lambda v: f.evaluate(2.0 * v) * kernel(v)  # noqa: E731
        split = [0.5 * p for p in breakpoints]
    elif end == RIGHT:
        x = TWO_PI
        g = lambda v: f.evaluate(TWO_PI - 2.0 * v) * kernel(v)  # noqa: E731
        split = [0.5 * (TWO_PI - p) for p in breakpoints]
    else:
        raise ArgumentError("End must be %r or %r, got %r" % (LEFT, RIGHT, end))

    result = _integrate(
        g,
        0.0,
        math.pi,
        0.5 * tol * math.pi,
        2 * n + 1 + 2 * f.max_angular_frequency,
        split,
        "endpoint s_%d(%s)" % (n, end),
    ).scaled(2.0 / math.pi)

    # The endpoint forms are the split form with one half empty.
    return PartialSumResult(x, n, result.value, KERNEL_SPLIT, result.error_estimate)


def partial_sum(
    f: PiecewiseFunction,
    n: int,
    x: PointLike,
    method: Method = SERIES,
    tol: float = 1e-8,
    coefficients: Optional[FourierCoefficients] = None,
) -> PartialSumResult:
    """Dispatch to one of the four partial-sum constructions.

    For ``series``, coefficients are computed with ``K = max(n, 1)`` unless
    given.
    """
    if method == SERIES:
        if coefficients is None:
            coefficients = fourier_coefficients(f, max(check_order(n), 1), tol)
        return partial_sum_series(coefficients, n, x)

    if method == KERNEL_RAW:
        return partial_sum_kernel_raw(f, n, x, tol)

    if method == KERNEL_SPLIT:
        return partial_sum_kernel_split(f, n, x, tol)

    if method == PERIODIC:
        return partial_sum_periodic(f, n, x, tol)

    raise ArgumentError("Unknown method %r" % (method,))
