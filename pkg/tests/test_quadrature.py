import math

import numpy as np
import pytest

from dirichlab.exceptions import (
    ArgumentError,
    EvaluationError,
    QuadratureAccuracyError,
)
from dirichlab.quadrature import (
    OscillationHint,
    QuadratureResult,
    initial_partition,
    integrate,
)


@pytest.mark.parametrize(
    "g,a,b,hint,expected",
    [
        (lambda x: x**3, 0.0, 1.0, 0.0, 0.25),
        (np.sin, 0.0, math.pi, 1.0, 2.0),
        (lambda x: np.cos(100.0 * x) ** 2, 0.0, 2.0 * math.pi, 200.0, math.pi),
        (lambda x: np.exp(-x), 0.0, 40.0, 0.0, 1.0 - math.exp(-40.0)),
        (lambda x: x * np.sin(50.0 * x), 0.0, math.pi, 50.0, -math.pi / 50.0),
    ],
)
def test_integrate(g, a, b, hint, expected):
    result = integrate(g, a, b, 1e-12, hint=hint)

    assert result.value == pytest.approx(expected, abs=1e-11)
    assert result.error_estimate <= 2e-12


def test_integrate_split_at_kink():
    result = integrate(np.abs, -1.0, 1.0, 1e-13, split_at=[0.0])

    assert result.value == pytest.approx(1.0, abs=1e-14)
    assert result.panels == 2


def test_integrate_empty_range():
    result = integrate(np.sin, 1.0, 1.0, 1e-8)

    assert result == QuadratureResult(0.0, 0.0, 1)


@pytest.mark.parametrize(
    "a,b,tol,split_at",
    [
        (1.0, 0.0, 1e-8, ()),
        (0.0, math.inf, 1e-8, ()),
        (0.0, 1.0, 0.0, ()),
        (0.0, 1.0, 1e-8, (2.0,)),
    ],
)
def test_integrate_invalid_arguments(a, b, tol, split_at):
    with pytest.raises(ArgumentError):
        integrate(np.sin, a, b, tol, split_at=split_at)


def test_integrate_non_finite_sample():
    with pytest.raises(EvaluationError):
        integrate(lambda x: np.full_like(x, np.nan), 0.0, 1.0, 1e-8)


def test_integrate_budget_exhausted():
    with pytest.raises(QuadratureAccuracyError) as info:
        integrate(np.sqrt, 0.0, 1.0, 1e-15, max_panels=8, label="sqrt")

    assert info.value.label == "sqrt"
    assert info.value.panels <= 8
    assert info.value.value == pytest.approx(2.0 / 3.0, abs=1e-3)


def test_relabel():
    error = QuadratureAccuracyError("budget exhausted", 1.0, 0.5, 3)
    result = error.relabel("a_7")

    assert str(result) == "a_7: budget exhausted"
    assert (result.value, result.error_estimate, result.panels) == (1.0, 0.5, 3)


@pytest.mark.parametrize(
    "frequency,expected",
    [
        (0.0, math.pi),
        (0.5, math.pi),
        (10.0, math.pi / 10.0),
    ],
)
def test_panel_width(frequency, expected):
    result = OscillationHint(frequency).panel_width

    assert result == expected


def test_negative_hint():
    with pytest.raises(ArgumentError):
        OscillationHint(-1.0)


def test_initial_partition():
    los, his = initial_partition(0.0, 2.0 * math.pi, OscillationHint(2.0), [1.0])

    assert los.size == 5
    assert los[0] == 0.0 and his[0] == 1.0
    assert his[-1] == 2.0 * math.pi
    assert np.all(his - los <= math.pi / 2.0 + 1e-15)
    assert np.array_equal(los[1:], his[:-1])


def test_result_arithmetic():
    total = QuadratureResult(1.0, 0.1, 2) + QuadratureResult(2.0, 0.2, 3)
    result = total.scaled(-2.0)

    assert result.value == -6.0
    assert result.error_estimate == pytest.approx(0.6)
    assert result.panels == 5


def test_oscillatory_integrand_needs_no_split():
    # A kernel peak of width ~1/N is resolved by the frequency hint alone.
    N = 500
    result = integrate(
        lambda x: np.sin((2 * N + 1) * x) / np.sin(x),
        1e-3,
        math.pi / 2.0,
        1e-10,
        hint=2 * N + 1,
    )

    assert math.isfinite(result.value)
    assert result.error_estimate <= 2e-10


def test_integrate_is_linear():
    g = lambda x: np.exp(-x)  # noqa: E731
    h = lambda x: x * np.sin(3.0 * x)  # noqa: E731
    alpha, beta = 2.0, -3.0
    first = integrate(g, 0.0, 2.0, 1e-11, hint=3.0)
    second = integrate(h, 0.0, 2.0, 1e-11, hint=3.0)
    result = integrate(lambda x: alpha * g(x) + beta * h(x), 0.0, 2.0, 1e-11, hint=3.0)

    expected = alpha * first.value + beta * second.value
    slack = (
        result.error_estimate
        + abs(alpha) * first.error_estimate
        + abs(beta) * second.error_estimate
    )
    assert abs(result.value - expected) <= slack + 1e-13


@pytest.mark.parametrize("b", [0.4, 1.3, 2.9])
def test_integrate_is_additive(b):
    g = lambda x: x * np.sin(5.0 * x)  # noqa: E731
    left = integrate(g, 0.0, b, 1e-11, hint=5.0)
    right = integrate(g, b, 3.0, 1e-11, hint=5.0)
    result = integrate(g, 0.0, 3.0, 1e-11, hint=5.0)

    slack = result.error_estimate + left.error_estimate + right.error_estimate
    assert abs(result.value - (left.value + right.value)) <= slack + 1e-13


@pytest.mark.parametrize("M", [1, 101, 1001, 2001])
def test_high_frequency_cosine_vanishes(M):
    result = integrate(lambda x: np.cos(M * x), 0.0, 2.0 * math.pi, 1e-10, hint=M)

    assert abs(result.value) <= 1e-8
