from typing import Optional


class DirichlabError(Exception):
    """Base class of all errors raised by dirichlab."""


class DomainError(DirichlabError, ValueError):
    """A point or range falls outside the domain of a function."""


class ArgumentError(DirichlabError, ValueError):
    """An argument has an invalid value."""


class PreconditionError(ArgumentError):
    """A caller-asserted precondition does not hold."""


class FunctionSpecError(DirichlabError, ValueError):
    """Invalid function specification."""


class FunctionSyntaxError(FunctionSpecError):
    """Function spec text does not follow the grammar.

    Args:
        message: What went wrong.
        line: 1-based line of the offending character.
        column: 1-based column of the offending character.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


class TilingError(FunctionSpecError):
    """Segment intervals leave a gap or overlap."""


class UnsupportedExponentError(FunctionSpecError):
    """Power exponent out of the supported range."""


class NumericalError(DirichlabError, ArithmeticError):
    """Base class of numerical failures."""


class EvaluationError(NumericalError):
    """An integrand or ratio cannot be evaluated to a finite value."""


class QuadratureAccuracyError(NumericalError):
    """Quadrature stopped before reaching the requested tolerance.

    The best value found so far is kept on the exception.
    """

    def __init__(
        self,
        message: str,
        value: float,
        error_estimate: float,
        panels: int,
        label: Optional[str] = None,
    ):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.panels = panels
        self.label = label

    def relabel(self, label: str) -> "QuadratureAccuracyError":
        """Return a copy naming the integral that failed."""
        return QuadratureAccuracyError(
            "%s: %s" % (label, self.args[0]),
            value=self.value,
            error_estimate=self.error_estimate,
            panels=self.panels,
            label=label,
        )
