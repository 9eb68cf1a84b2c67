"""Adaptive Gauss-Kronrod quadrature for oscillatory, piecewise-smooth integrands.

Integrands are vectorised: they take a 1-D ``numpy`` array of abscissae and
return the values at all of them.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple, Union

import numpy as np

from .consts import DEFAULT_PANEL_BUDGET
from .exceptions import ArgumentError, EvaluationError, QuadratureAccuracyError

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

# 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
)
_WGK_CENTER = 0.209482141084727828012999174891714
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
)
_WG_CENTER = 0.417959183673469387755102040816327

NODES = np.array([-x for x in _XGK] + [0.0] + list(reversed(_XGK)))
KRONROD_WEIGHTS = np.array(list(_WGK) + [_WGK_CENTER] + list(reversed(_WGK)))
GAUSS_WEIGHTS = np.zeros(15)
for _i, _w in zip((1, 3, 5), _WG):
    GAUSS_WEIGHTS[_i] = GAUSS_WEIGHTS[14 - _i] = _w
GAUSS_WEIGHTS[7] = _WG_CENTER

_ROUNDOFF = 50.0 * np.finfo(float).eps


@dataclass(frozen=True)
class OscillationHint:
    """Largest angular frequency ``|a|`` among ``sin(a*x)``/``cos(a*x)`` factors."""

    max_angular_frequency: float = 0.0

    def __post_init__(self):
        freq = float(self.max_angular_frequency)
        if not math.isfinite(freq) or freq < 0:
            raise ArgumentError("Oscillation frequency must be finite and nonnegative")

        object.__setattr__(self, "max_angular_frequency", freq)

    @property
    def panel_width(self) -> float:
        """Widest initial panel: half an oscillation period."""
        return math.pi / max(1.0, self.max_angular_frequency)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    panels: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise ArgumentError("Error estimate must be nonnegative")
        if self.panels < 1:
            raise ArgumentError("Panel count must be positive")

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.panels + other.panels,
        )

    def scaled(self, factor: float) -> "QuadratureResult":
        """Multiply the value (and its error bar) by a constant."""
        return QuadratureResult(
            factor * self.value, abs(factor) * self.error_estimate, self.panels
        )


def gauss_kronrod(
    g: Integrand, los: np.ndarray, his: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Apply the 7/15-point pair to every panel ``[los[i], his[i]]``.

    Returns:
        Kronrod values and error estimates, one per panel.

    Raises:
        EvaluationError: If the integrand returns a non-finite sample.
    """
    centers = 0.5 * (los + his)
    half = 0.5 * (his - los)
    x = centers[:, None] + half[:, None] * NODES[None, :]

    fx = np.broadcast_to(np.asarray(g(x.ravel()), dtype=float), (x.size,))
    fx = fx.reshape(x.shape)

    if not np.all(np.isfinite(fx)):
        bad = x[~np.isfinite(fx)][0]
        raise EvaluationError("Integrand is not finite at x = %r" % bad)

    kronrod = half * (fx @ KRONROD_WEIGHTS)
    gauss = half * (fx @ GAUSS_WEIGHTS)
    resabs = np.abs(half) * (np.abs(fx) @ KRONROD_WEIGHTS)

    # Estimates never drop below the round-off level of the panel.
    error = np.maximum(np.abs(kronrod - gauss), _ROUNDOFF * resabs)

    return kronrod, error


def initial_partition(
    a: float, b: float, hint: OscillationHint, split_at: Iterable[float]
) -> Tuple[np.ndarray, np.ndarray]:
    """Split ``[a, b]`` at every ``split_at`` point, then into panels no wider
    than half an oscillation."""
    edges = sorted({a, b} | {float(s) for s in split_at if a < s < b})

    los, his = [], []
    for lo, hi in zip(edges, edges[1:]):
        count = max(1, math.ceil((hi - lo) / hint.panel_width))
        grid = np.linspace(lo, hi, count + 1)
        grid[-1] = hi
        los.append(grid[:-1])
        his.append(grid[1:])

    return np.concatenate(los), np.concatenate(his)


def integrate(
    g: Integrand,
    a: float,
    b: float,
    tol: float,
    hint: Union[OscillationHint, float] = 0.0,
    split_at: Iterable[float] = (),
    max_panels: int = DEFAULT_PANEL_BUDGET,
    label: Optional[str] = None,
) -> QuadratureResult:
    """Integrate ``g`` over ``[a, b]``.

    Panels failing their share of ``tol`` (proportional to panel width) are
    halved until they pass or the panel budget is spent.

    Args:
        g: Vectorised integrand, finite on ``[a, b]``.
        a: Lower limit.
        b: Upper limit, ``b >= a``.
        tol: Absolute tolerance, positive.
        hint: Largest angular frequency of the integrand, or an
            ``OscillationHint``.
        split_at: Points where the integrand is not smooth.
        max_panels: Panel budget.
        label: Name of the integral used in error messages.

    Raises:
        ArgumentError: On invalid limits, tolerance or split points.
        EvaluationError: If ``g`` returns a non-finite sample.
        QuadratureAccuracyError: If the budget is spent first.
    """
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or a > b:
        raise ArgumentError("Invalid integration range [%r, %r]" % (a, b))
    if not tol > 0:
        raise ArgumentError("Tolerance must be positive")
    if not isinstance(hint, OscillationHint):
        hint = OscillationHint(hint)

    split_points = [float(s) for s in split_at]
    if any(not a <= s <= b for s in split_points):
        raise ArgumentError("Split points must lie in [%r, %r]" % (a, b))

    if a == b:
        return QuadratureResult(0.0, 0.0, 1)

    los, his = initial_partition(a, b, hint, split_points)
    panels = los.size
    length = b - a

    done_lo, done_value, done_error = [], [], []
    rounds = 0

    while los.size:
        values, errors = gauss_kronrod(g, los, his)
        passed = errors <= tol * (his - los) / length
        rounds += 1

        done_lo.append(los[passed])
        done_value.append(values[passed])
        done_error.append(errors[passed])

        failed = ~passed
        count = int(failed.sum())
        logger.debug(
            "round %d: %d panels evaluated, %d to refine", rounds, los.size, count
        )
        if not count:
            break

        if panels + count > max_panels:
            done_lo.append(los[failed])
            done_value.append(values[failed])
            done_error.append(errors[failed])
            value, error = _total(done_lo, done_value, done_error)

            logger.warning("panel budget of %d exhausted", max_panels)
            raise QuadratureAccuracyError(
                "Panel budget of %d exhausted with error estimate %.3g > %.3g"
                % (max_panels, error, tol),
                value=value,
                error_estimate=error,
                panels=panels,
                label=label,
            )

        mids = 0.5 * (los[failed] + his[failed])
        los, his = (
            np.concatenate([los[failed], mids]),
            np.concatenate([mids, his[failed]]),
        )
        panels += count

    value, error = _total(done_lo, done_value, done_error)
    return QuadratureResult(value, error, panels)


def _total(los, values, errors) -> Tuple[float, float]:
    lo = np.concatenate(los)
    order = np.argsort(lo, kind="stable")
    return (
        math.fsum(np.concatenate(values)[order]),
        math.fsum(np.concatenate(errors)[order]),
    )
