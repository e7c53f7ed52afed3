"""Create-view operations: break editing, paint-mode pinning, custom methods.

The paint solver holds the bin count fixed while moving breaks: pins only
reshape intervals, and any bin emptied along the way is surfaced as a note
instead of being deleted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CannotRemoveOuterExtent,
    ConflictingConstraints,
    InfeasibleConstraints,
    NonMonotoneResult,
    UnknownFeature,
)
from .result import assign, check_extents
from .series import FeatureSeries

MISUSE_WARNING = "We recommend using this feature only for educational purposes."

# minimum relative separation enforced between repaired breaks
SEPARATION_REL = 1e-9


def misuse_warning() -> str:
    """The warning shown on every paint-mode surface, verbatim."""
    return MISUSE_WARNING


@dataclass(frozen=True)
class PinConstraint:
    """Pin a feature (or a raw value) into a 1-based target bin."""

    target_bin: int
    feature_id: str | None = None
    value: float | None = None

    def resolve_value(self, series: FeatureSeries) -> float:
        if self.value is not None:
            return float(self.value)
        if self.feature_id is None:
            raise UnknownFeature("pin constraint needs a feature id or a value")
        v = series.value_of(self.feature_id)
        if v is None:
            raise UnknownFeature(
                f"feature {self.feature_id!r} is unknown or has no value"
            )
        return v


def add_break(extents: Sequence[float], value: float) -> tuple[float, ...]:
    """Insert an interior break, splitting the bin it lands in."""
    ext = check_extents(extents)
    value = float(value)
    if not ext[0] < value < ext[-1] or value in ext:
        raise NonMonotoneResult(
            f"new break {value!r} must fall strictly inside ({ext[0]!r}, {ext[-1]!r}) "
            "and off existing breaks"
        )
    return tuple(sorted(ext + (value,)))


def remove_break(extents: Sequence[float], index: int) -> tuple[float, ...]:
    """Delete the extent at ``index``, merging its two bins. Outer extents stay."""
    ext = check_extents(extents)
    if index < 0 or index >= len(ext):
        raise NonMonotoneResult(f"extent index {index} out of range")
    if index in (0, len(ext) - 1):
        raise CannotRemoveOuterExtent("outer extents bound the data and cannot be removed")
    return ext[:index] + ext[index + 1:]


def set_break(extents: Sequence[float], index: int, value: float) -> tuple[float, ...]:
    """Move one extent to a new value, keeping the list strictly increasing."""
    ext = list(check_extents(extents))
    if index < 0 or index >= len(ext):
        raise NonMonotoneResult(f"extent index {index} out of range")
    ext[index] = float(value)
    if any(ext[i] >= ext[i + 1] for i in range(len(ext) - 1)):
        raise NonMonotoneResult(
            f"moving extent {index} to {value!r} breaks monotonicity"
        )
    return tuple(ext)


def edit_breaks(extents: Sequence[float], edit: dict) -> tuple[float, ...]:
    """Apply one {op, ...} edit: add(value), remove(index) or set(index, value)."""
    op = edit.get("op")
    if op == "add":
        return add_break(extents, edit["value"])
    if op == "remove":
        return remove_break(extents, int(edit["index"]))
    if op == "set":
        return set_break(extents, int(edit["index"]), edit["value"])
    raise NonMonotoneResult(f"unknown edit op {op!r}")


def _constraint_windows(
    pins: list[tuple[float, int]], k: int, lo: float, hi: float
) -> list[tuple[float, float]]:
    """Feasibility window (L_i, U_i] for each interior break i = 1..k-1.

    Sides no pin constrains default to the outer extents, which coincide with
    the data extremes for every standard method.
    """
    windows = []
    for i in range(1, k):
        lower = max((v for v, t in pins if t <= i), default=lo)
        upper = min((v for v, t in pins if t > i), default=hi)
        windows.append((lower, upper))
    return windows


def apply_pins(
    extents: Sequence[float],
    constraints: Sequence[PinConstraint],
    series: FeatureSeries,
) -> tuple[tuple[float, ...], list[str]]:
    """Move breaks so every pinned value lands in its target bin.

    Breaks already satisfying their window stay untouched; the rest move to
    midpoints inside the window, then a forward pass restores strict
    monotonicity. Returns the new extents plus notes (emptied bins, changes).
    """
    ext = list(check_extents(extents))
    k = len(ext) - 1
    lo, hi = ext[0], ext[-1]

    pins: list[tuple[float, int]] = []
    for c in constraints:
        if not 1 <= c.target_bin <= k:
            raise InfeasibleConstraints(
                f"target bin {c.target_bin} outside 1..{k}"
            )
        pins.append((c.resolve_value(series), c.target_bin))

    by_value: dict[float, int] = {}
    for v, t in pins:
        if v in by_value and by_value[v] != t:
            raise InfeasibleConstraints(
                f"value {v!r} pinned to bins {by_value[v]} and {t}"
            )
        by_value[v] = t
    ordered = sorted(by_value.items())
    targets = [t for _, t in ordered]
    if any(targets[i] > targets[i + 1] for i in range(len(targets) - 1)):
        raise InfeasibleConstraints(
            "pins sorted by value must have non-decreasing target bins"
        )

    windows = _constraint_windows(pins, k, lo, hi)
    if any(lower >= upper for lower, upper in windows):
        raise InfeasibleConstraints("no break placement satisfies every pin")

    notes: list[str] = []
    new_breaks = list(ext[1:-1])
    for i, (lower, upper) in enumerate(windows):
        b = new_breaks[i]
        if lower < b <= upper:
            continue
        next_above = new_breaks[i + 1] if i + 1 < len(new_breaks) else hi
        ceiling = min(upper, next_above) if next_above > lower else upper
        moved = lower + (ceiling - lower) / 2.0
        notes.append(f"BreakMoved: extent {i + 1} from {b!r} to {moved!r}")
        new_breaks[i] = moved

    # forward pass: enforce strict increase, then re-check each window
    sep = SEPARATION_REL * (hi - lo)
    prev = lo
    for i in range(len(new_breaks)):
        if new_breaks[i] <= prev + sep:
            new_breaks[i] = prev + sep
        lower, upper = windows[i]
        if not lower < new_breaks[i] <= upper:
            raise ConflictingConstraints(
                f"monotone repair pushed break {i + 1} outside its window "
                f"({lower!r}, {upper!r}]"
            )
        prev = new_breaks[i]
    if new_breaks and new_breaks[-1] >= hi:
        raise ConflictingConstraints("monotone repair ran past the top extent")

    result = tuple([lo] + new_breaks + [hi])
    _, sizes, _ = assign(series, result)
    for j, size in enumerate(sizes, start=1):
        if size == 0:
            notes.append(f"EmptyBin: bin {j} holds no features after painting")
    return result, notes
