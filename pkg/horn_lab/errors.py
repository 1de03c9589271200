"""
Exception types.

Bad input raises a `ValueError` subclass; a verification pipeline that
cannot finish raises a `RuntimeError` subclass.
"""

from __future__ import annotations


class BoxViolationError(ValueError):
    """Partition does not fit the a x (n - a) box."""


class DimensionError(ValueError):
    """Objects with different (r, n) or point lengths were combined."""


class SingularEvaluationError(ValueError):
    """Bialternant denominator vanished (repeated evaluation points)."""


class NotInChamberError(ValueError):
    """A sequence that must be weakly decreasing is not."""


class PreconditionError(ValueError):
    """An operation was called outside the domain it is stated on."""


class NonHermitianError(ValueError):
    """Matrix differs from its conjugate transpose beyond tolerance."""


class HypothesisError(ValueError):
    """The LR coefficient of the input triple is not 1."""

    def __init__(self, message: str, coefficient: int) -> None:
        super().__init__(message)
        self.coefficient = coefficient


class InsufficientSamplesError(RuntimeError):
    def __init__(self, achieved: int, requested: int) -> None:
        super().__init__(
            f"only {achieved} of {requested} valid samples could be generated"
        )
        self.achieved = achieved
        self.requested = requested


class TraceStepError(RuntimeError):
    """A step of the scaling trace failed; carries the step index."""

    def __init__(self, step: int, predicate: str) -> None:
        super().__init__(f"step {step} failed: {predicate}")
        self.step = step
        self.predicate = predicate
