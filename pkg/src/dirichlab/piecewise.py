"""Piecewise-smooth functions with exact one-sided limits."""

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union, overload

import numpy as np

from .consts import (
    COSINE,
    DOMAIN_SLACK,
    EXPONENTIAL,
    MAX_EXPONENT,
    POWER,
    SINE,
    TermKind,
)
from .exceptions import (
    ArgumentError,
    DomainError,
    TilingError,
    UnsupportedExponentError,
)

Real = Union[int, float, Fraction]


def to_fraction(value: Union[Real, str]) -> Fraction:
    """Convert to an exact ``Fraction``, rejecting non-finite floats."""
    if isinstance(value, Fraction):
        return value

    if isinstance(value, (int, str)):
        return Fraction(value)

    value = float(value)
    if not math.isfinite(value):
        raise ArgumentError("Value must be finite")

    return Fraction(value)


@functools.total_ordering
@dataclass(frozen=True)
class Bound:
    """An interval endpoint stored exactly as ``coefficient`` or ``coefficient * pi``.

    Args:
        coefficient: Exact rational coefficient.
        pi: Whether the coefficient multiplies pi.
    """

    coefficient: Fraction
    pi: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coefficient", to_fraction(self.coefficient))

        # Zero has a single representation.
        if self.coefficient == 0:
            object.__setattr__(self, "pi", False)

    def __float__(self) -> float:
        return self.value

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Bound):
            return NotImplemented

        return self.value < other.value

    @property
    def value(self) -> float:
        v = float(self.coefficient)
        return v * math.pi if self.pi else v

    @classmethod
    def of(cls, value: Union["Bound", Real]) -> "Bound":
        """Coerce a plain number (or a ``Bound``) into a ``Bound``."""
        if isinstance(value, Bound):
            return value

        return cls(to_fraction(value))


PointLike = Union[Bound, Real]


def point_value(x: PointLike) -> float:
    return x.value if isinstance(x, Bound) else float(x)


@dataclass(frozen=True)
class Term:
    """One closed-form summand of a segment.

    ``power`` is ``coefficient * x**parameter``, ``exponential`` is
    ``coefficient * exp(parameter * x)``, ``cosine`` and ``sine`` are
    ``coefficient * cos(parameter * x + phase)`` and likewise with sin.
    """

    kind: TermKind
    coefficient: Fraction
    parameter: Fraction = Fraction(0)
    phase: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("coefficient", "parameter", "phase"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))

        if self.kind not in (POWER, EXPONENTIAL, COSINE, SINE):
            raise ArgumentError("Unknown term kind: %r" % (self.kind,))

        if self.kind == POWER:
            if self.parameter.denominator != 1 or not (
                0 <= self.parameter <= MAX_EXPONENT
            ):
                raise UnsupportedExponentError(
                    "Exponent must be an integer in [0, %d], got %s"
                    % (MAX_EXPONENT, self.parameter)
                )

        if self.phase != 0 and self.kind not in (COSINE, SINE):
            raise ArgumentError("Only trigonometric terms carry a phase")

    @classmethod
    def power(cls, exponent: int, coefficient: Real = 1) -> "Term":
        return cls(POWER, to_fraction(coefficient), to_fraction(exponent))

    @classmethod
    def exponential(cls, rate: Real, coefficient: Real = 1) -> "Term":
        return cls(EXPONENTIAL, to_fraction(coefficient), to_fraction(rate))

    @classmethod
    def cosine(cls, frequency: Real, phase: Real = 0, coefficient: Real = 1) -> "Term":
        return cls(
            COSINE, to_fraction(coefficient), to_fraction(frequency), to_fraction(phase)
        )

    @classmethod
    def sine(cls, frequency: Real, phase: Real = 0, coefficient: Real = 1) -> "Term":
        return cls(
            SINE, to_fraction(coefficient), to_fraction(frequency), to_fraction(phase)
        )

    @property
    def max_angular_frequency(self) -> float:
        """Largest |a| of an oscillating factor in this term."""
        return abs(float(self.parameter)) if self.kind in (COSINE, SINE) else 0.0

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        c = float(self.coefficient)
        a = float(self.parameter)

        if self.kind == POWER:
            # x**0 is 1 everywhere, including at x = 0.
            return c * np.power(x, int(self.parameter))

        if self.kind == EXPONENTIAL:
            return c * np.exp(a * x)

        b = float(self.phase)
        if self.kind == COSINE:
            return c * np.cos(a * x + b)

        return c * np.sin(a * x + b)


@dataclass(frozen=True)
class Segment:
    """Sum of ``terms`` on ``[lo, hi)``.

    The last segment of a function also owns ``hi``.
    """

    lo: Bound
    hi: Bound
    terms: Tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "lo", Bound.of(self.lo))
        object.__setattr__(self, "hi", Bound.of(self.hi))
        object.__setattr__(self, "terms", tuple(self.terms))

        if not self.terms:
            raise ArgumentError("Segment needs at least one term")

        if not self.lo < self.hi:
            raise TilingError(
                "Empty interval [%s, %s]" % (self.lo.value, self.hi.value)
            )

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        result = np.zeros_like(x, dtype=float)
        for term in self.terms:
            result = result + term.evaluate(x)

        return result


@dataclass(frozen=True)
class PiecewiseFunction:
    """Ordered segments tiling ``[x_lo, x_hi]`` with no gaps or overlaps.

    Evaluation at a breakpoint uses the segment to its right, except at
    ``x_hi`` which the last segment owns.
    """

    segments: Tuple[Segment, ...]
    _edges: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        segments = tuple(self.segments)
        if not segments:
            raise TilingError("A function needs at least one segment")

        for left, right in zip(segments, segments[1:]):
            if left.hi != right.lo:
                problem = "overlap" if right.lo < left.hi else "gap"
                raise TilingError(
                    "Segments leave a %s between %s and %s"
                    % (problem, left.hi.value, right.lo.value)
                )

        object.__setattr__(self, "segments", segments)
        object.__setattr__(
            self, "_edges", np.array([s.lo.value for s in segments[1:]], dtype=float)
        )

    @classmethod
    def single(
        cls, terms: Sequence[Term], lo: PointLike = 0, hi: PointLike = Bound(2, pi=True)
    ) -> "PiecewiseFunction":
        """Shorthand for a function made of one segment."""
        return cls((Segment(Bound.of(lo), Bound.of(hi), tuple(terms)),))

    @property
    def domain(self) -> Tuple[Bound, Bound]:
        return self.segments[0].lo, self.segments[-1].hi

    @property
    def x_lo(self) -> float:
        return self.segments[0].lo.value

    @property
    def x_hi(self) -> float:
        return self.segments[-1].hi.value

    @property
    def breakpoints(self) -> Tuple[Bound, ...]:
        """Interior breakpoints, ascending."""
        return tuple(s.lo for s in self.segments[1:])

    @property
    def max_angular_frequency(self) -> float:
        return max(t.max_angular_frequency for s in self.segments for t in s.terms)

    def has_domain(self, lo: PointLike, hi: PointLike) -> bool:
        """Whether the domain is exactly ``[lo, hi]``."""
        return _same_point(self.x_lo, point_value(lo)) and _same_point(
            self.x_hi, point_value(hi)
        )

    def covers(self, lo: PointLike, hi: PointLike) -> bool:
        """Whether ``[lo, hi]`` lies inside the domain."""
        slack = self._slack()
        return (
            self.x_lo - slack <= point_value(lo)
            and point_value(hi) <= self.x_hi + slack
        )

    @overload
    def evaluate(self, x: float) -> float:
        ...

    @overload
    def evaluate(self, x: np.ndarray) -> np.ndarray:
        ...

    def evaluate(self, x):
        """Evaluate the owning segment's closed form at ``x``.

        Raises:
            DomainError: If any point lies outside the domain.
        """
        xs = np.asarray(x, dtype=float)
        slack = self._slack()

        if np.any(xs < self.x_lo - slack) or np.any(xs > self.x_hi + slack):
            raise DomainError(
                "Point outside domain [%r, %r]" % (self.x_lo, self.x_hi)
            )

        xs = np.clip(xs, self.x_lo, self.x_hi)
        owner = np.searchsorted(self._edges, xs, side="right")

        result = np.empty_like(xs)
        for i, segment in enumerate(self.segments):
            mask = owner == i
            if np.any(mask):
                result[mask] = segment.evaluate(xs[mask])

        return float(result) if result.ndim == 0 else result

    def __call__(self, x):
        return self.evaluate(x)

    def one_sided_limits(
        self, x0: PointLike
    ) -> Tuple[Optional[float], Optional[float]]:
        """Return ``(f(x0-0), f(x0+0))`` from the segment closed forms.

        The left limit is ``None`` at ``x_lo`` and the right limit is ``None``
        at ``x_hi``.

        Raises:
            DomainError: If ``x0`` is outside the closed domain.
        """
        x = point_value(x0)
        if not self.x_lo <= x <= self.x_hi:
            raise DomainError(
                "Point %r outside domain [%r, %r]" % (x, self.x_lo, self.x_hi)
            )

        point = np.asarray(x, dtype=float)
        left = right = None

        if x > self.x_lo:
            i = int(np.searchsorted(self._edges, x, side="left"))
            left = float(self.segments[i].evaluate(point))

        if x < self.x_hi:
            i = int(np.searchsorted(self._edges, x, side="right"))
            right = float(self.segments[i].evaluate(point))

        return left, right

    def is_continuous_on(self, lo: PointLike, hi: PointLike) -> bool:
        """Whether no breakpoint strictly inside ``(lo, hi)`` is a jump."""
        a, b = point_value(lo), point_value(hi)
        for breakpoint in self.breakpoints:
            if a < breakpoint.value < b:
                left, right = self.one_sided_limits(breakpoint)
                assert left is not None and right is not None
                if not math.isclose(left, right, rel_tol=1e-12, abs_tol=1e-12):
                    return False

        return True

    def periodic_extension(
        self, period: Optional[PointLike] = None
    ) -> "PeriodicExtension":
        return PeriodicExtension(self, period)

    def _slack(self) -> float:
        return DOMAIN_SLACK * max(1.0, abs(self.x_lo), abs(self.x_hi))


def _same_point(x: float, y: float) -> bool:
    return math.isclose(x, y, rel_tol=DOMAIN_SLACK, abs_tol=DOMAIN_SLACK)


class PeriodicExtension:
    """Provide a read-only periodic view of a piecewise function.

    Args:
        source: The function whose domain is one period.
        period: Must equal ``x_hi - x_lo``. Defaults to that length.
    """

    def __init__(self, source: PiecewiseFunction, period: Optional[PointLike] = None):
        length = source.x_hi - source.x_lo

        if period is not None and not _same_point(point_value(period), length):
            raise ArgumentError(
                "Period %r does not match domain length %r"
                % (point_value(period), length)
            )

        self._source = source
        self._period = length

    def __eq__(self, other):
        if not isinstance(other, PeriodicExtension):
            return False

        return self.source == other.source

    @property
    def source(self) -> PiecewiseFunction:
        return self._source

    @property
    def period(self) -> float:
        return self._period

    def __call__(self, x):
        x_lo = self._source.x_lo
        xs = np.asarray(x, dtype=float)
        wrapped = x_lo + np.mod(xs - x_lo, self._period)
        return self._source.evaluate(wrapped if wrapped.ndim else float(wrapped))


def periodic_extension(
    f: PiecewiseFunction, period: Optional[PointLike] = None
) -> PeriodicExtension:
    """Shorthand for `PeriodicExtension(f, period)`."""
    return PeriodicExtension(f, period)
