from .dirichlet import (
    LimitEstimate,
    RangeSpec,
    cot_integral,
    dirichlet_integral,
    limit_sweep,
    predicted_limit,
    riemann_lebesgue,
)
from .fourier import (
    FourierCoefficients,
    PartialSumResult,
    dirichlet_kernel,
    dirichlet_ratio,
    endpoint_sum,
    fourier_coefficients,
    partial_sum,
)
from .funcdsl import format_function, parse_function
from .piecewise import Bound, PiecewiseFunction, Segment, Term, periodic_extension
from .poisson import PoissonReport, poisson_finite, poisson_infinite
from .quadrature import QuadratureResult, integrate

__version__ = "0.1.0"
