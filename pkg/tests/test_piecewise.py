import math
from fractions import Fraction

import numpy as np
import pytest

from dirichlab import Bound, PiecewiseFunction, Segment, Term, periodic_extension
from dirichlab.exceptions import (
    ArgumentError,
    DomainError,
    TilingError,
    UnsupportedExponentError,
)

PI = Bound(1, pi=True)
TWO_PI = Bound(2, pi=True)

SQUARE = PiecewiseFunction(
    (
        Segment(Bound(0), PI, (Term.power(0),)),
        Segment(PI, TWO_PI, (Term.power(0, coefficient=0),)),
    )
)
RAMP = PiecewiseFunction.single([Term.power(1)])


@pytest.mark.parametrize(
    "bound,expected",
    [
        (Bound(Fraction(1, 2), pi=True), math.pi / 2),
        (Bound(Fraction(-3, 4)), -0.75),
        (Bound(0, pi=True), 0.0),
    ],
)
def test_bound_value(bound, expected):
    result = bound.value

    assert result == expected


def test_bound_zero_is_unique():
    assert Bound(0, pi=True) == Bound(0)


@pytest.mark.parametrize(
    "term,x,expected",
    [
        (Term.power(2, coefficient=3), 2.0, 12.0),
        (Term.power(0), 0.0, 1.0),
        (Term.exponential(-1), 1.0, math.exp(-1)),
        (Term.cosine(2, phase=Fraction(1, 2)), 0.25, math.cos(1.0)),
        (Term.sine(1, coefficient=-2), math.pi / 2, -2.0),
    ],
)
def test_term_evaluate(term, x, expected):
    result = term.evaluate(np.array([x]))[0]

    assert result == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("exponent", [13, Fraction(1, 2), -1])
def test_term_rejects_exponent(exponent):
    with pytest.raises(UnsupportedExponentError):
        Term.power(exponent)


def test_term_rejects_phase_on_power():
    with pytest.raises(ArgumentError):
        Term("power", 1, 1, phase=1)


@pytest.mark.parametrize(
    "segments",
    [
        (
            Segment(Bound(0), Bound(1), (Term.power(0),)),
            Segment(Bound(2), Bound(3), (Term.power(0),)),
        ),
        (
            Segment(Bound(0), PI, (Term.power(0),)),
            Segment(Bound(Fraction(1, 2), pi=True), TWO_PI, (Term.power(0),)),
        ),
    ],
)
def test_tiling_error(segments):
    with pytest.raises(TilingError):
        PiecewiseFunction(segments)


def test_empty_segment():
    with pytest.raises(TilingError):
        Segment(Bound(1), Bound(1), (Term.power(0),))


@pytest.mark.parametrize(
    "x,expected",
    [
        (1.0, 1.0),
        (math.pi, 0.0),
        (2.0 * math.pi, 0.0),
        (0.0, 1.0),
    ],
)
def test_evaluate_owner(x, expected):
    result = SQUARE(x)

    assert result == expected


def test_evaluate_array():
    result = SQUARE.evaluate(np.array([0.5, 3.0, 4.0, 6.0]))

    assert result.tolist() == [1.0, 1.0, 0.0, 0.0]


@pytest.mark.parametrize("x", [-0.1, 7.0])
def test_evaluate_outside_domain(x):
    with pytest.raises(DomainError):
        SQUARE(x)


def test_evaluate_accepts_rounding_overshoot():
    result = RAMP(2.0 * math.pi * (1 + 1e-15))

    assert result == 2.0 * math.pi


@pytest.mark.parametrize(
    "x0,expected",
    [
        (PI, (1.0, 0.0)),
        (Bound(0), (None, 1.0)),
        (TWO_PI, (0.0, None)),
        (1.0, (1.0, 1.0)),
    ],
)
def test_one_sided_limits(x0, expected):
    result = SQUARE.one_sided_limits(x0)

    assert result == expected


def test_one_sided_limits_outside_domain():
    with pytest.raises(DomainError):
        SQUARE.one_sided_limits(7.0)


@pytest.mark.parametrize(
    "f,lo,hi,expected",
    [
        (SQUARE, 0, TWO_PI, False),
        (SQUARE, 0, 1, True),
        (SQUARE, PI, TWO_PI, True),
        (RAMP, 0, TWO_PI, True),
    ],
)
def test_is_continuous_on(f, lo, hi, expected):
    result = f.is_continuous_on(lo, hi)

    assert result == expected


def test_breakpoints_are_exact():
    result = SQUARE.breakpoints

    assert result == (PI,)


def test_covers():
    assert RAMP.covers(0, PI)
    assert not RAMP.covers(-1, PI)


@pytest.mark.parametrize(
    "x,expected",
    [
        (1.0, 1.0),
        (2.0 * math.pi + 1.0, 1.0),
        (-1.0, 2.0 * math.pi - 1.0),
        (-4.0 * math.pi + 0.5, 0.5),
    ],
)
def test_periodic_extension(x, expected):
    g = periodic_extension(RAMP, TWO_PI)
    result = g(x)

    assert result == pytest.approx(expected, rel=1e-12)


def test_periodic_extension_period_mismatch():
    with pytest.raises(ArgumentError):
        periodic_extension(RAMP, PI)


def test_periodic_extension_array():
    g = RAMP.periodic_extension()
    result = g(np.array([-1.0, 1.0]))

    assert result.tolist() == pytest.approx([2.0 * math.pi - 1.0, 1.0], rel=1e-12)


@pytest.mark.parametrize("f", [SQUARE, RAMP])
@pytest.mark.parametrize("x", [1e-6, 0.5, 2.0, 3.5, 5.0, 2.0 * math.pi - 1e-6])
def test_periodic_extension_agrees_inside(f, x):
    result = f.periodic_extension()(x)

    assert result == pytest.approx(f(x), rel=1e-12)
