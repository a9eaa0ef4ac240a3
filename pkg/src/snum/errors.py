"""Exception hierarchy.

Everything a caller can reasonably recover from derives from ``SnumError``;
``DomainError`` subclasses map to CLI exit code 2.
"""


class SnumError(Exception):
    pass


class DomainError(SnumError, ValueError):
    """Parameters are valid values but outside the domain of an operation."""


class NonCompactError(DomainError):
    """The embedding is not compact, so no decay rate exists."""


class HypothesisViolation(DomainError):
    """An allocation scheme was requested outside its parameter region."""


class RegimeNotCovered(DomainError):
    """No finite-dimensional bound row covers the requested (p0, p, n, m)."""


class NumericalFailure(SnumError, ArithmeticError):
    """An iterative numerical routine did not converge."""


class DegenerateFit(SnumError, ArithmeticError):
    """Least-squares design matrix is rank deficient."""
