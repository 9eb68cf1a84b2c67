"""Dirichlet integrals and their limits as the frequency grows.

For ``mu = 2N + 1`` the integral ``int_0^U f(x) sin(mu x)/sin(x) dx`` tends to
a weighted sum of one-sided limits of ``f`` at ``0``, at the multiples of pi
inside ``[0, U]`` and at ``U``. ``predicted_limit`` evaluates those sums in
closed form; ``limit_sweep`` estimates the limit numerically by averaging the
integral over a window of consecutive ``N``.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Literal, Optional, Sequence, Tuple, overload

import numpy as np

from .consts import (
    DEFAULT_WINDOW,
    FULL_PI,
    INTERIOR,
    MULTI_PI,
    UNIT_NODES,
    RangeKind,
)
from .exceptions import (
    ArgumentError,
    DomainError,
    PreconditionError,
    QuadratureAccuracyError,
)
from .fourier import check_order, dirichlet_ratio
from .piecewise import Bound, PiecewiseFunction, PointLike, point_value
from .quadrature import QuadratureResult, integrate

logger = logging.getLogger(__name__)

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class RangeSpec:
    """Integration range of a Dirichlet integral.

    - ``interior``: ``[0, a]`` with ``0 < a < pi``;
    - ``full_pi``: ``[0, pi]``;
    - ``multi_pi``: ``[0, m*pi]``;
    - ``unit_nodes``: ``[0, m]`` with the integrand
      ``f(x) sin((2N+1) pi x) / sin(pi x)``.
    """

    kind: RangeKind
    a: Optional[float] = None
    m: Optional[int] = None

    def __post_init__(self):
        if self.kind == INTERIOR:
            if self.a is None or not 0.0 < point_value(self.a) < math.pi:
                raise ArgumentError("Interior range needs 0 < a < pi, got %r" % self.a)
            object.__setattr__(self, "a", point_value(self.a))

        elif self.kind in (MULTI_PI, UNIT_NODES):
            if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
                raise ArgumentError("Range %s needs an integer m >= 1" % self.kind)

        elif self.kind != FULL_PI:
            raise ArgumentError("Unknown range kind %r" % (self.kind,))

    @classmethod
    def interior(cls, a: PointLike) -> "RangeSpec":
        return cls(INTERIOR, a=point_value(a))

    @classmethod
    def full_pi(cls) -> "RangeSpec":
        return cls(FULL_PI)

    @classmethod
    def multi_pi(cls, m: int) -> "RangeSpec":
        return cls(MULTI_PI, m=m)

    @classmethod
    def unit_nodes(cls, m: int) -> "RangeSpec":
        return cls(UNIT_NODES, m=m)

    @property
    def scale(self) -> float:
        """Spacing of the kernel's removable points: pi, or 1 for unit nodes."""
        return 1.0 if self.kind == UNIT_NODES else math.pi

    @property
    def argument_scale(self) -> float:
        """Factor on ``x`` inside the kernel ratio: pi for unit nodes, else 1."""
        return math.pi if self.kind == UNIT_NODES else 1.0

    @property
    def node_count(self) -> int:
        """Number of spacings covered: ``m``, or 1."""
        if self.kind in (MULTI_PI, UNIT_NODES):
            assert self.m is not None
            return self.m

        return 1

    @property
    def upper(self) -> float:
        if self.kind == INTERIOR:
            assert self.a is not None
            return self.a

        return self.node_count * self.scale

    def node(self, k: int) -> PointLike:
        """The ``k``-th removable point, exact when it is a multiple of pi."""
        return k if self.kind == UNIT_NODES else Bound(k, pi=True)


@dataclass(frozen=True)
class LimitEstimate:
    """Mean of an oscillatory integral over consecutive ``N``, next to its
    predicted limit."""

    window_values: Tuple[Tuple[int, float], ...]
    estimate: float
    spread: float
    predicted: float
    window: int

    @property
    def deviation(self) -> float:
        return abs(self.estimate - self.predicted)


@dataclass(frozen=True)
class DecayFit:
    """Least-squares fit ``|I_N| ~ constant * N**exponent``."""

    N_values: Tuple[int, ...]
    values: Tuple[float, ...]
    exponent: float
    constant: float


def _quadrature(g, upper, tol, hint, split_at, label) -> QuadratureResult:
    try:
        return integrate(g, 0.0, upper, tol, hint=hint, split_at=split_at, label=label)

    except QuadratureAccuracyError as e:
        raise e.relabel(label) from e


def _require_covers(f: PiecewiseFunction, upper: float):
    if not f.covers(0.0, upper):
        raise DomainError(
            "Function on [%r, %r] does not cover [0, %r]" % (f.x_lo, f.x_hi, upper)
        )


def _interior_breakpoints(f: PiecewiseFunction, upper: float) -> List[float]:
    return [p.value for p in f.breakpoints if 0.0 < p.value < upper]


def _check_positive(N: int) -> int:
    N = check_order(N)
    if N < 1:
        raise ArgumentError("N must be positive")

    return N


@overload
def dirichlet_integral(
    f: PiecewiseFunction,
    range_spec: RangeSpec,
    N: int,
    tol: float = ...,
    mu: Optional[float] = ...,
    *,
    full_output: Literal[False] = ...,
) -> float:
    ...


@overload
def dirichlet_integral(
    f: PiecewiseFunction,
    range_spec: RangeSpec,
    N: int,
    tol: float = ...,
    mu: Optional[float] = ...,
    *,
    full_output: Literal[True],
) -> QuadratureResult:
    ...


def dirichlet_integral(f, range_spec, N, tol=1e-8, mu=None, *, full_output=False):
    """``int_0^U f(x) sin(mu x)/sin(x) dx`` with ``mu = 2N + 1``.

    For ``unit_nodes`` the integrand is ``f(x) sin(mu pi x)/sin(pi x)``.

    Args:
        f: Function defined on the whole range.
        range_spec: Integration range.
        N: Nonnegative integer order.
        tol: Absolute tolerance.
        mu: Frequency replacing ``2N + 1``. A non-integer ``mu`` is only
            accepted for ``interior`` ranges.
        full_output: Return the ``QuadratureResult`` instead of the value.

    Raises:
        DomainError: If ``f`` does not cover the range.
        PreconditionError: If ``f`` jumps inside a ``unit_nodes`` range.
    """
    N = check_order(N)
    frequency = 2 * N + 1 if mu is None else float(mu)
    if not float(frequency).is_integer() and range_spec.kind != INTERIOR:
        raise ArgumentError("Non-integer frequency needs an interior range")

    upper = range_spec.upper
    scale = range_spec.scale
    multiplier = range_spec.argument_scale
    _require_covers(f, upper)

    if range_spec.kind == UNIT_NODES and not f.is_continuous_on(0.0, upper):
        raise PreconditionError("The node form needs f continuous on [0, %r]" % upper)

    split = _interior_breakpoints(f, upper) + [
        k * scale for k in range(1, range_spec.node_count)
    ]

    result = _quadrature(
        lambda x: f.evaluate(x) * dirichlet_ratio(frequency, multiplier * x),
        upper,
        tol,
        frequency * multiplier + f.max_angular_frequency,
        split,
        "dirichlet %s N=%d" % (range_spec.kind, N),
    )

    return result if full_output else result.value


def _limit(f: PiecewiseFunction, x: PointLike, side: int) -> float:
    value = f.one_sided_limits(x)[side]
    if value is None:
        raise DomainError("No one-sided limit at %r" % point_value(x))

    return value


def predicted_limit(f: PiecewiseFunction, range_spec: RangeSpec) -> float:
    """Closed-form limit of ``dirichlet_integral`` as ``N`` grows.

    - ``interior``: ``(pi/2) f(0+)``
    - ``full_pi``: ``(pi/2) [f(0+) + f(pi-)]``
    - ``multi_pi``: ``(pi/2) [f(0+) + f(m pi-)]
      + (pi/2) sum_{n=1}^{m-1} [f(n pi-) + f(n pi+)]``
    - ``unit_nodes``: ``[f(0) + f(m)]/2 + sum_{n=1}^{m-1} f(n)``

    Raises:
        DomainError: If a needed one-sided limit does not exist.
    """
    right_at_zero = _limit(f, 0, 1)

    if range_spec.kind == INTERIOR:
        return HALF_PI * right_at_zero

    # Each interior node collects the mean of its two one-sided limits.
    m = range_spec.node_count
    total = 0.5 * (right_at_zero + _limit(f, range_spec.node(m), 0))
    for k in range(1, m):
        node = range_spec.node(k)
        total += 0.5 * (_limit(f, node, 0) + _limit(f, node, 1))

    if range_spec.kind == UNIT_NODES:
        return total

    return math.pi * total


def _windowed(
    evaluate: Callable[[int], float], N_start: int, window: int, predicted: float
) -> LimitEstimate:
    if isinstance(window, bool) or not isinstance(window, int) or window < 2:
        raise ArgumentError("Window must be an integer >= 2, got %r" % (window,))

    rows = []
    for N in range(N_start, N_start + window):
        rows.append((N, evaluate(N)))
        logger.debug("N = %d: %r", N, rows[-1][1])

    values = [v for _, v in rows]
    return LimitEstimate(
        window_values=tuple(rows),
        estimate=math.fsum(values) / window,
        spread=max(values) - min(values),
        predicted=predicted,
        window=window,
    )


def limit_sweep(
    f: PiecewiseFunction,
    range_spec: RangeSpec,
    N_start: int,
    window: int = DEFAULT_WINDOW,
    tol: float = 1e-8,
) -> LimitEstimate:
    """Average ``dirichlet_integral`` over ``N_start .. N_start + window - 1``."""
    check_order(N_start)
    return _windowed(
        lambda N: dirichlet_integral(f, range_spec, N, tol),
        N_start,
        window,
        predicted_limit(f, range_spec),
    )


@overload
def riemann_lebesgue(
    f: PiecewiseFunction,
    a: PointLike,
    N: int,
    tol: float = ...,
    *,
    full_output: Literal[False] = ...,
) -> float:
    ...


@overload
def riemann_lebesgue(
    f: PiecewiseFunction,
    a: PointLike,
    N: int,
    tol: float = ...,
    *,
    full_output: Literal[True],
) -> QuadratureResult:
    ...


def riemann_lebesgue(f, a, N, tol=1e-10, *, full_output=False):
    """``int_0^a f(x) cos(2Nx) dx``, which tends to zero as ``N`` grows."""
    N = _check_positive(N)
    a = point_value(a)
    if not 0.0 < a <= 2.0 * math.pi:
        raise ArgumentError("Need 0 < a <= 2pi, got %r" % a)
    _require_covers(f, a)

    result = _quadrature(
        lambda x: f.evaluate(x) * np.cos(2.0 * N * x),
        a,
        tol,
        2 * N + f.max_angular_frequency,
        _interior_breakpoints(f, a),
        "riemann_lebesgue N=%d" % N,
    )

    return result if full_output else result.value


def decay_fit(N_values: Sequence[int], values: Sequence[float]) -> DecayFit:
    """Fit ``log|value|`` against ``log N``; zero values are left out."""
    points = [(n, abs(v)) for n, v in zip(N_values, values) if v != 0]

    if len(points) < 2:
        exponent = constant = math.nan
    else:
        log_n = np.log([n for n, _ in points])
        log_v = np.log([v for _, v in points])
        slope, intercept = np.polyfit(log_n, log_v, 1)
        exponent, constant = float(slope), float(np.exp(intercept))

    return DecayFit(tuple(N_values), tuple(values), exponent, constant)


def riemann_lebesgue_sweep(
    f: PiecewiseFunction, a: PointLike, N_list: Sequence[int], tol: float = 1e-10
) -> DecayFit:
    """Tabulate ``riemann_lebesgue`` over ``N_list`` and fit its decay rate."""
    values = [riemann_lebesgue(f, a, N, tol) for N in N_list]
    return decay_fit(N_list, values)


@overload
def cot_integral(
    f: PiecewiseFunction,
    a: PointLike,
    N: int,
    tol: float = ...,
    *,
    full_output: Literal[False] = ...,
) -> float:
    ...


@overload
def cot_integral(
    f: PiecewiseFunction,
    a: PointLike,
    N: int,
    tol: float = ...,
    *,
    full_output: Literal[True],
) -> QuadratureResult:
    ...


def cot_integral(f, a, N, tol=1e-8, *, full_output=False):
    """``int_0^a f(x) cot(x) sin(2Nx) dx`` for ``0 < a < pi``.

    Its limit is ``(pi/2) f(0+)``, like the Dirichlet integral it comes from.
    """
    N = _check_positive(N)
    a = point_value(a)
    if not 0.0 < a < math.pi:
        raise ArgumentError("Need 0 < a < pi, got %r" % a)
    _require_covers(f, a)

    result = _quadrature(
        lambda x: f.evaluate(x) * np.cos(x) * dirichlet_ratio(2 * N, x),
        a,
        tol,
        2 * N + 1 + f.max_angular_frequency,
        _interior_breakpoints(f, a),
        "cot N=%d" % N,
    )

    return result if full_output else result.value


def cot_sweep(
    f: PiecewiseFunction,
    a: PointLike,
    N_start: int,
    window: int = DEFAULT_WINDOW,
    tol: float = 1e-8,
) -> LimitEstimate:
    """Average ``cot_integral`` over ``N_start .. N_start + window - 1``."""
    _check_positive(N_start)
    return _windowed(
        lambda N: cot_integral(f, a, N, tol),
        N_start,
        window,
        HALF_PI * _limit(f, 0, 1),
    )


def split_dirichlet_integral(
    f: PiecewiseFunction, a: PointLike, N: int, tol: float = 1e-8
) -> Tuple[QuadratureResult, QuadratureResult]:
    """The two parts of ``sin((2N+1)x)/sin(x) = cot(x) sin(2Nx) + cos(2Nx)``.

    Returns:
        ``(cot part, cosine part)``; their sum is the Dirichlet integral over
        ``[0, a]``.
    """
    return (
        cot_integral(f, a, N, tol, full_output=True),
        riemann_lebesgue(f, a, N, tol, full_output=True),
    )


@overload
def folded_integral(
    f: PiecewiseFunction,
    N: int,
    tol: float = ...,
    *,
    full_output: Literal[False] = ...,
) -> float:
    ...


@overload
def folded_integral(
    f: PiecewiseFunction,
    N: int,
    tol: float = ...,
    *,
    full_output: Literal[True],
) -> QuadratureResult:
    ...


def folded_integral(f, N, tol=1e-8, *, full_output=False):
    """``int_0^{pi/2} [f(x) + f(pi - x)] sin((2N+1)x)/sin(x) dx``.

    Substituting ``x -> pi - x`` on ``[pi/2, pi]`` shows this equals the
    ``full_pi`` Dirichlet integral.
    """
    N = check_order(N)
    _require_covers(f, math.pi)

    breakpoints = _interior_breakpoints(f, math.pi)
    split = [p for p in breakpoints if p < HALF_PI] + [
        math.pi - p for p in breakpoints if p > HALF_PI
    ]

    result = _quadrature(
        lambda x: (f.evaluate(x) + f.evaluate(math.pi - x))
        * dirichlet_ratio(2 * N + 1, x),
        HALF_PI,
        tol,
        2 * N + 1 + f.max_angular_frequency,
        split,
        "folded N=%d" % N,
    )

    return result if full_output else result.value

