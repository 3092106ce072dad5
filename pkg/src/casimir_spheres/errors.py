"""Exception types shared across the library."""


class PrecisionLossError(ArithmeticError):
    """A quantity cancelled below the resolvable floating-point resolution.

    Raised e.g. when 1 - M underflows while evaluating ln(1 - M) for nearly
    touching spheres, where the reflection coefficient M approaches 1.
    """


class NonConvergenceError(RuntimeError):
    """A truncated sum or quadrature hit its hard cap before reaching tolerance."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class OutOfRegimeError(ValueError):
    """An asymptotic series was evaluated outside its domain of validity."""
