"""Exception types raised across the package."""


class SumspacesError(Exception):
    """Base class for all package-specific errors."""


class AllZeroInput(SumspacesError, ValueError):
    """Raised when a spanning set contains only numerically zero columns."""


class DimensionMismatch(SumspacesError, ValueError):
    """Raised when objects that must share an ambient dimension do not."""


class WrongArity(SumspacesError, ValueError):
    """Raised when an operation defined for a fixed number of subspaces
    receives a different count."""


class NumericalError(SumspacesError, ArithmeticError):
    """Raised when a computed quantity violates a bound it must satisfy
    mathematically (signals broken input or a numerical bug)."""


class InconsistencyError(SumspacesError, ArithmeticError):
    """Raised when equivalent formulations of the spectral criterion
    disagree outside the boundary dead zone."""


class CriterionNotSatisfied(SumspacesError, RuntimeError):
    """Raised when a certified convergence bound is requested but the
    spectral criterion does not hold."""


class NotBoundary(SumspacesError, ValueError):
    """Raised when a boundary-case construction is requested for a matrix
    whose spectral radius is not 1 (after any permitted rescaling)."""


class NotPositiveDefinite(SumspacesError, ValueError):
    """Raised when a matrix expected to be positive definite fails the
    eigenvalue check."""


class VerificationFailed(SumspacesError, RuntimeError):
    """Raised when a constructed counterexample family fails one of its
    verification checks.  Carries the full verification record."""

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = record
