"""Exception types shared across the engine.

Every failure mode is an explicit exception; no routine returns NaN.
"""


class GfvError(Exception):
    """Base class for all engine errors."""


class DomainError(GfvError):
    """Argument outside the implemented domain (pole, cut, unsupported region)."""


class PoleError(DomainError):
    """Evaluation exactly at a pole."""


class RangeOverflowError(GfvError):
    """Result magnitude exceeds binary64 range."""


class NonConvergenceError(GfvError):
    """Iteration budget exhausted before the tolerance was met.

    Carries the best value seen so far in ``partial`` so callers can report it.
    """

    def __init__(self, message, partial=None, err_estimate=None):
        super().__init__(message)
        self.partial = partial
        self.err_estimate = err_estimate


class OrderError(GfvError):
    """Requested coefficient index exceeds a series truncation order."""


class EvaluationError(GfvError):
    """Expression evaluation failed; message carries the source span."""
