"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DivergenceError(ArithmeticError):
    """An integral diverges or the quadrature budget was exhausted.

    Carries the partial value computed before giving up, when one exists.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InfeasibleConstruction(RuntimeError):
    """A bound construction is not applicable at the given parameters."""
