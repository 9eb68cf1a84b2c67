import math

import numpy as np
import pytest

from dirichlab import endpoint_sum, fourier_coefficients, parse_function, partial_sum
from dirichlab.exceptions import ArgumentError, DomainError, EvaluationError
from dirichlab.fourier import (
    FourierCoefficients,
    check_order,
    dirichlet_kernel,
    dirichlet_ratio,
    partial_sum_kernel_raw,
    partial_sum_kernel_split,
    partial_sum_periodic,
    partial_sum_series,
)
from dirichlab.quadrature import integrate

SQUARE = parse_function("[0,1pi): 1 ; [1pi,2pi]: 0")
RAMP = parse_function("x")

CORPUS = [
    parse_function("1"),
    RAMP,
    SQUARE,
    parse_function("exp(-x)"),
    parse_function("cos(x)"),
]


@pytest.mark.parametrize(
    "n,u,expected",
    [
        (0, 0.0, 0.5),
        (3, 0.0, 3.5),
        (3, 2.0 * math.pi, 3.5),
        (3, -2.0 * math.pi, 3.5),
        (2, 1.0, math.sin(2.5) / (2.0 * math.sin(0.5))),
        (4, 1e-10, 4.5),
    ],
)
def test_dirichlet_kernel(n, u, expected):
    result = dirichlet_kernel(n, u)

    assert result == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("n", [1, 3, 10])
def test_dirichlet_kernel_is_cosine_sum(n):
    u = np.linspace(-7.0, 7.0, 101)
    expected = 0.5 + sum(np.cos(k * u) for k in range(1, n + 1))
    result = dirichlet_kernel(n, u)

    assert result.shape == u.shape
    assert np.allclose(result, expected, rtol=0, atol=1e-12)


@pytest.mark.parametrize("n", [0, 1, 7, 50])
def test_dirichlet_kernel_normalization(n):
    kernel = lambda v: dirichlet_kernel(n, 2.0 * v)  # noqa: E731
    half = integrate(kernel, 0.0, math.pi / 2.0, 1e-11, hint=2 * n + 1)
    full = integrate(kernel, 0.0, math.pi, 1e-11, hint=2 * n + 1)

    assert 4.0 / math.pi * half.value == pytest.approx(1.0, abs=1e-10)
    assert 2.0 / math.pi * full.value == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize(
    "mu,x,expected",
    [
        (3, 0.0, 3.0),
        (3, math.pi, 3.0),
        (2, math.pi, -2.0),
        (2, -math.pi, -2.0),
        (5, 2.0 * math.pi, 5.0),
        (2.5, 0.0, 2.5),
        (3, 1.0, math.sin(3.0) / math.sin(1.0)),
    ],
)
def test_dirichlet_ratio(mu, x, expected):
    result = dirichlet_ratio(mu, x)

    assert result == pytest.approx(expected, rel=1e-12)


def test_dirichlet_ratio_non_removable():
    with pytest.raises(EvaluationError):
        dirichlet_ratio(2.5, np.array([0.5, math.pi]))


@pytest.mark.parametrize("mu", [0, -1, math.inf])
def test_dirichlet_ratio_invalid_frequency(mu):
    with pytest.raises(ArgumentError):
        dirichlet_ratio(mu, 1.0)


@pytest.mark.parametrize(
    "mu,x",
    [
        (1e9, 5e-9),
        (2e8, -7e-9),
        (7.0, 1e-12),
        (1e6 + 1.0, math.pi + 2e-9),
    ],
)
def test_dirichlet_ratio_large_frequency_near_zero(mu, x):
    d = x - math.pi * round(x / math.pi)
    result = dirichlet_ratio(mu, x)

    assert result == pytest.approx(math.sin(mu * d) / math.sin(d), rel=1e-6)


def test_dirichlet_ratio_large_frequency_sign():
    result = dirichlet_ratio(1e9, 5e-9)

    assert result == pytest.approx(-1.9178485493e8, rel=1e-6)


@pytest.mark.parametrize("n", [0, 3, 50])
@pytest.mark.parametrize("u", [0.0, 1e-9, 0.7, 2.0 * math.pi, 3.0, 13.5])
def test_dirichlet_kernel_is_even(n, u):
    assert dirichlet_kernel(n, -u) == dirichlet_kernel(n, u)


@pytest.mark.parametrize("n", [0, 3, 50])
@pytest.mark.parametrize("x", [0.0, 1e-10, 0.3, 1.0, math.pi, math.pi + 1e-10, -4.0])
def test_dirichlet_ratio_matches_kernel(n, x):
    result = dirichlet_ratio(2 * n + 1, x)

    assert result == pytest.approx(2.0 * dirichlet_kernel(n, 2.0 * x), rel=1e-12)


@pytest.mark.parametrize("n", [-1, 1.5, True, 10**6])
def test_check_order(n):
    with pytest.raises(ArgumentError):
        check_order(n)


def test_square_wave_coefficients():
    result = fourier_coefficients(SQUARE, 8, 1e-11)

    assert result.a[0] == pytest.approx(1.0, abs=1e-10)
    assert np.allclose(result.a[1:], 0.0, atol=1e-10)
    expected_b = [2.0 / (k * math.pi) if k % 2 else 0.0 for k in range(1, 9)]
    assert np.allclose(result.b, expected_b, rtol=0, atol=1e-10)


def test_ramp_coefficients():
    result = fourier_coefficients(RAMP, 5, 1e-11)

    assert result.a[0] == pytest.approx(2.0 * math.pi, abs=1e-10)
    assert np.allclose(result.a[1:], 0.0, atol=1e-10)
    assert np.allclose(result.b, [-2.0 / k for k in range(1, 6)], rtol=0, atol=1e-10)


@pytest.mark.parametrize("text", ["[0,1pi]: x", "[-1,2pi]: x"])
def test_coefficients_need_full_period(text):
    with pytest.raises(DomainError):
        fourier_coefficients(parse_function(text), 4)


def test_coefficients_shape():
    with pytest.raises(ArgumentError):
        FourierCoefficients((1.0, 2.0), (1.0, 2.0), 1, 1e-8)


def test_series_order_above_k():
    c = fourier_coefficients(RAMP, 3)

    with pytest.raises(ArgumentError):
        partial_sum_series(c, 4, 1.0)


@pytest.mark.parametrize("n", [1, 5, 40])
def test_series_at_jump_is_midpoint(n):
    c = fourier_coefficients(SQUARE, n, 1e-11)
    result = partial_sum_series(c, n, math.pi)

    assert result.value == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("n", [1, 5, 40])
def test_series_ramp_at_zero(n):
    c = fourier_coefficients(RAMP, n, 1e-11)
    result = partial_sum_series(c, n, 0.0)

    assert result.value == pytest.approx(math.pi, abs=1e-12)


@pytest.mark.parametrize("method", ["kernel_raw", "kernel_split", "periodic"])
@pytest.mark.parametrize("f", CORPUS)
@pytest.mark.parametrize("n", [5, 20, 50])
def test_methods_agree_with_series(f, n, method):
    c = fourier_coefficients(f, n, 1e-12)
    worst = 0.0
    for x in np.linspace(0.0, 2.0 * math.pi, 10)[1:-1]:
        series = partial_sum_series(c, n, x)
        result = partial_sum(f, n, x, method, tol=1e-9)
        worst = max(worst, abs(result.value - series.value))

        assert abs(result.value - series.value) <= 10.0 * (
            result.error_estimate + (2 * n + 1) * 1e-12
        )

    assert worst <= 1e-8


@pytest.mark.parametrize("method", ["series", "kernel_raw", "kernel_split", "periodic"])
def test_jump_midpoint_every_method(method):
    result = partial_sum(SQUARE, 30, math.pi, method, tol=1e-10)

    assert result.value == pytest.approx(0.5, abs=1e-8)
    assert result.method == method


def test_kernel_split_converges_at_smooth_point():
    errors = [
        abs(partial_sum_kernel_split(SQUARE, n, math.pi / 2.0).value - 1.0)
        for n in (10, 20, 50, 100, 200)
    ]

    assert all(a > b for a, b in zip(errors, errors[1:]))
    assert errors[-1] <= 0.02


@pytest.mark.parametrize("x", [0.0, 2.0 * math.pi])
def test_kernel_split_rejects_endpoints(x):
    with pytest.raises(ArgumentError):
        partial_sum_kernel_split(RAMP, 5, x)


@pytest.mark.parametrize("end", ["left", "right"])
def test_endpoint_sum_ramp(end):
    result = endpoint_sum(RAMP, 200, end)

    assert result.value == pytest.approx(math.pi, abs=0.05)
    assert result.method == "kernel_split"


def test_endpoint_sum_invalid_end():
    with pytest.raises(ArgumentError):
        endpoint_sum(RAMP, 5, "middle")  # type: ignore[arg-type]


@pytest.mark.parametrize("x", [0.0, 2.0 * math.pi])
def test_kernel_raw_at_endpoints(x):
    result = partial_sum_kernel_raw(RAMP, 20, x)

    assert result.value == pytest.approx(math.pi, abs=1e-7)


def test_kernel_raw_outside_domain():
    with pytest.raises(DomainError):
        partial_sum_kernel_raw(RAMP, 5, 7.0)


@pytest.mark.parametrize("x", [0.0, 1.0, 2.0 * math.pi, 8.0])
def test_periodic_matches_series_anywhere(x):
    c = fourier_coefficients(SQUARE, 10, 1e-12)
    result = partial_sum_periodic(SQUARE, 10, x)

    assert result.value == pytest.approx(partial_sum_series(c, 10, x).value, abs=1e-7)


def test_partial_sum_unknown_method():
    with pytest.raises(ArgumentError):
        partial_sum(RAMP, 5, 1.0, "fejer")  # type: ignore[arg-type]
