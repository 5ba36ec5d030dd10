"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation did not reach the requested tolerance.

    The best estimate reached so far, when available, is attached as the
    ``best`` attribute.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class CFEvaluationError(ArithmeticError):
    """A continued-fraction tail denominator vanished during evaluation.

    ``level`` is the index of the offending partial denominator.
    """

    def __init__(self, message, level):
        super().__init__(message)
        self.level = level
