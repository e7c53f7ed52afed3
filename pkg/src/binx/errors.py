"""Exception hierarchy shared by the engine, CLI and HTTP service.

Every error carries a stable machine-readable ``code`` (the class name) so
the service can map engine failures onto API error payloads without string
matching.
"""

from __future__ import annotations

from typing import Any


class BinxError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message: str = "", **details: Any) -> None:
        super().__init__(message or type(self).__name__)
        self.message = message or type(self).__name__
        self.details = details

    @property
    def code(self) -> str:
        return type(self).__name__


# --- series / assignment ---------------------------------------------------

class EmptySeries(BinxError):
    """No valid (non-missing) values to operate on."""


class NonMonotoneExtents(BinxError):
    """Extents are not strictly increasing."""


class MismatchedInputs(BinxError):
    """A result was checked against a series it was not derived from."""


# --- method parameters -----------------------------------------------------

class InvalidBinCount(BinxError):
    pass


class InvalidIntervalSize(BinxError):
    pass


class TooManyBins(BinxError):
    pass


class InvalidGrowth(BinxError):
    pass


class InvalidIqrFactor(BinxError):
    pass


class InvalidThreshold(BinxError):
    pass


class InvalidStep(BinxError):
    pass


class NotEnoughDistinctValues(BinxError):
    pass


class KExceedsDistinct(BinxError):
    pass


class NonMonotoneBreaks(BinxError):
    pass


class UnknownMethod(BinxError):
    pass


# --- consensus / resiliency ------------------------------------------------

class BinCountMismatch(BinxError):
    pass


class TooFewMethods(BinxError):
    pass


class PaletteTooSmall(BinxError):
    pass


# --- create / reclassify ---------------------------------------------------

class NonMonotoneResult(BinxError):
    pass


class CannotRemoveOuterExtent(BinxError):
    pass


class InfeasibleConstraints(BinxError):
    """Pin targets contradict the value ordering; no break layout exists."""


class ConflictingConstraints(BinxError):
    """Monotone repair pushed a break outside its feasibility window."""


class UnknownFeature(BinxError):
    pass


class DuplicateName(BinxError):
    pass


class InvalidExtents(BinxError):
    pass


# --- data io ----------------------------------------------------------------

class MissingColumn(BinxError):
    pass


class UnparseableRow(BinxError):
    pass


class DuplicateId(BinxError):
    pass


class InvalidGeoJson(BinxError):
    pass


class MissingIdProperty(BinxError):
    pass


class EmptyJoin(BinxError):
    pass


class UnsupportedTarget(BinxError):
    pass


# --- palettes ----------------------------------------------------------------

class BinCountExceedsPalette(BinxError):
    pass


class InvalidHex(BinxError):
    pass


CONFLICT_ERRORS = (DuplicateName,)
INFEASIBLE_ERRORS = (InfeasibleConstraints, ConflictingConstraints)
