"""Exception hierarchy shared by every evaluator in the package."""


class CylrepError(Exception):
    """Base class for all library errors."""


class DomainError(CylrepError, ValueError):
    """Argument outside the region where a formula is defined."""


class BranchCutError(DomainError):
    """Argument lies on a branch cut that the formula does not cross."""


class DivergenceError(DomainError):
    """The function has a singularity (pole or logarithmic blow-up) at the argument."""


class PoleAtNonpositiveInteger(DivergenceError):
    """Gamma evaluated exactly at 0, -1, -2, ..."""


class TruePole(DivergenceError):
    """A gamma ratio whose numerator pole is not cancelled by the denominator."""


class AccuracyError(CylrepError, ArithmeticError):
    """A series or quadrature did not reach its tolerance.

    ``partial`` holds the best available estimate.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class QuadratureSamplingError(CylrepError, ArithmeticError):
    """The integrand returned a non-finite sample."""

    def __init__(self, message, abscissa):
        super().__init__(message)
        self.abscissa = abscissa
