"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DimensionCalculusError(Exception):
    """Base class for every error raised by this package."""


class GroundTooSmall(DimensionCalculusError):
    """The ground set is too small for the requested enumeration."""


class GroundMismatch(DimensionCalculusError):
    """Two partitions live on ground sets of different sizes."""


class VaryingDimTooSmall(DimensionCalculusError):
    """A varying factor dimension is below the minimum of 2."""


class InvalidShape(DimensionCalculusError):
    """A decomposition shape violates its invariants."""


class NotProper(DimensionCalculusError):
    """A single-block partition was supplied where a proper one is required."""


class NoCompactificationRule(DimensionCalculusError):
    """No boundary codimension rule is available for this space."""


class SpecInvalid(DimensionCalculusError):
    """A family specification failed validation.

    Carries the list of violated hypotheses.
    """

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class TargetTooLarge(DimensionCalculusError):
    """The target group does not fit inside the requested total dimension."""


class RankTooSmall(DimensionCalculusError):
    """A symplectic target atom has rank below 2."""


class UnitaryBoundViolated(DimensionCalculusError):
    """A unitary realization request violates 5 <= p+q+1 <= g'."""


class UnrealizableTarget(DimensionCalculusError):
    """The target group expression is not of a realizable form."""


class GenusTooSmall(DimensionCalculusError):
    """Fiber genus below 3; the budget method does not apply."""


class RuleNotProven(DimensionCalculusError):
    """The requested computation rule is only proven under stricter hypotheses."""
