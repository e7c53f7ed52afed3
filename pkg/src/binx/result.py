"""BinningResult and the break-to-assignment semantics shared by every method.

Interval semantics are right-open [e_{j-1}, e_j) with a closed top bin, so a
value sitting exactly on an interior break lands in the higher bin and the
data maximum lands in bin k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptySeries, NonMonotoneExtents
from .methodspec import MethodSpec
from .series import FeatureSeries

# spread assigned to a zero-range series so extents stay strictly increasing
DEGENERATE_REL_SPREAD = 1e-9


@dataclass(frozen=True)
class BinningResult:
    """Extents, per-bin sizes and per-feature assignments for one method run."""

    method: MethodSpec
    extents: tuple[float, ...]
    bin_sizes: tuple[int, ...]
    assignments: dict[str, int | None]
    notes: tuple[str, ...] = ()
    unclassed_positions: dict[str, float | None] | None = None

    @property
    def bin_count(self) -> int:
        return len(self.extents) - 1

    @property
    def interior_breaks(self) -> tuple[float, ...]:
        return self.extents[1:-1]

    def intervals(self) -> tuple[float, ...]:
        return tuple(
            self.extents[i + 1] - self.extents[i] for i in range(self.bin_count)
        )

    def __post_init__(self) -> None:
        ext = self.extents
        if len(ext) < 2:
            raise NonMonotoneExtents(f"need at least 2 extents, got {len(ext)}")
        if any(ext[i] >= ext[i + 1] for i in range(len(ext) - 1)):
            raise NonMonotoneExtents(f"extents not strictly increasing: {list(ext)}")
        if len(self.bin_sizes) != self.bin_count:
            raise NonMonotoneExtents(
                f"bin_sizes length {len(self.bin_sizes)} != bin count {self.bin_count}"
            )


def check_extents(extents: Sequence[float]) -> tuple[float, ...]:
    ext = tuple(float(e) for e in extents)
    if len(ext) < 2:
        raise NonMonotoneExtents(f"need at least 2 extents, got {len(ext)}")
    if any(ext[i] >= ext[i + 1] for i in range(len(ext) - 1)):
        raise NonMonotoneExtents(f"extents not strictly increasing: {list(ext)}")
    return ext


def degenerate_extents(value: float) -> tuple[float, float]:
    """Extents for an all-equal series: a hair above the value, never zero-width."""
    return (value, value + max(abs(value), 1.0) * DEGENERATE_REL_SPREAD)


def assign(
    series: FeatureSeries, extents: Sequence[float]
) -> tuple[dict[str, int | None], list[int], list[str]]:
    """Map every feature to a 1-based bin index under the right-open rule.

    Values outside [e0, ek] (possible for manual or painted extents) are
    clamped to the nearest extreme bin; each clamp is recorded as an
    OutOfRange note rather than dropping the feature.
    """
    ext = check_extents(extents)
    series.require_valid()
    arr = np.asarray(ext)
    k = len(ext) - 1

    idx = np.searchsorted(arr, series.values, side="right")
    notes: list[str] = []
    assignments: dict[str, int | None] = {}
    sizes = [0] * k
    for pos, fid in enumerate(series.feature_ids):
        if series.missing_mask[pos]:
            assignments[fid] = None
            continue
        v = float(series.values[pos])
        j = int(idx[pos])
        if j == 0:
            notes.append(f"OutOfRange: {fid} value {v!r} below {ext[0]!r}, clamped to bin 1")
            j = 1
        elif j > k:
            if v > ext[-1]:
                notes.append(
                    f"OutOfRange: {fid} value {v!r} above {ext[-1]!r}, clamped to bin {k}"
                )
            j = k  # v == e_k: closed top bin
        assignments[fid] = j
        sizes[j - 1] += 1
    return assignments, sizes, notes


def build_result(
    series: FeatureSeries,
    spec: MethodSpec,
    extents: Sequence[float],
    notes: Iterable[str] = (),
) -> BinningResult:
    """Assemble a BinningResult from computed extents (the common tail of every method)."""
    assignments, sizes, assign_notes = assign(series, extents)
    return BinningResult(
        method=spec,
        extents=check_extents(extents),
        bin_sizes=tuple(sizes),
        assignments=assignments,
        notes=tuple(notes) + tuple(assign_notes),
    )
