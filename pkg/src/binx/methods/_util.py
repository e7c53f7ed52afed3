"""Break post-processing shared by the statistical and size-targeting methods."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..methodspec import MethodSpec
from ..result import BinningResult, build_result, degenerate_extents
from ..series import FeatureSeries

MAX_BINS = 1000

# snapping tolerance for counting whole interval steps across a float range
STEP_EPS = 1e-9


def degenerate_result(series: FeatureSeries, spec: MethodSpec) -> BinningResult | None:
    """Single-bin result when every valid value is equal; None otherwise."""
    if not series.is_degenerate():
        return None
    v = series.data_min()
    return build_result(
        series, spec, degenerate_extents(v), ["Degenerate: all valid values equal"]
    )


def inclusive_quantile(sorted_values: np.ndarray, p: float) -> float:
    """Quantile by inclusive linear interpolation, h = (n-1)p + 1 over order stats."""
    return float(np.quantile(sorted_values, p, method="linear"))


def repair_breaks_keep_count(
    raw_breaks: Sequence[float],
    lo: float,
    hi: float,
    distinct_sorted: np.ndarray,
    notes: list[str],
) -> list[float]:
    """Force raw breaks into a strictly increasing chain inside (lo, hi).

    Duplicate-dominated data can interpolate a break onto an extent or onto a
    previous break. Such a break is nudged up to the midpoint between the last
    good boundary and the next distinct data value, which keeps the requested
    bin count and never splits equal values across bins. Each nudge is noted.
    """
    out: list[float] = []
    prev = lo
    for b in raw_breaks:
        b = float(b)
        if prev < b < hi:
            out.append(b)
            prev = b
            continue
        pos = int(np.searchsorted(distinct_sorted, prev, side="right"))
        if pos >= len(distinct_sorted):
            notes.append(f"BreakDropped: no room above {prev!r} for break {b!r}")
            continue
        anchor = min(float(distinct_sorted[pos]), hi)
        moved = prev + (anchor - prev) / 2.0
        notes.append(f"BreakAdjusted: {b!r} moved to {moved!r} to keep extents increasing")
        out.append(moved)
        prev = moved
    return out


def drop_out_of_range_breaks(
    raw_breaks: Sequence[float],
    lo: float,
    hi: float,
    notes: list[str],
    label: str = "Break",
) -> list[float]:
    """Remove breaks at or beyond the data extremes, then duplicates; note each removal."""
    kept: list[float] = []
    for b in raw_breaks:
        b = float(b)
        if not lo < b < hi:
            notes.append(f"{label}Removed: {b!r} outside open range ({lo!r}, {hi!r})")
            continue
        if kept and b <= kept[-1]:
            if b == kept[-1]:
                notes.append(f"{label}Removed: duplicate break {b!r}")
            else:
                notes.append(f"{label}Removed: {b!r} breaks monotonicity")
            continue
        kept.append(b)
    return kept


def largest_remainder_sizes(total: int, proportions: Sequence[float]) -> list[int]:
    """Integer sizes summing to ``total`` proportional to ``proportions``.

    Largest-remainder rounding; remainder ties go to the lowest index.
    """
    weights = np.asarray(proportions, dtype=float)
    quotas = total * weights / weights.sum()
    floors = np.floor(quotas).astype(int)
    residual = total - int(floors.sum())
    if residual > 0:
        fractions = quotas - floors
        # stable sort descending on fraction keeps lowest index first on ties
        order = np.argsort(-fractions, kind="stable")
        for idx in order[:residual]:
            floors[idx] += 1
    return [int(s) for s in floors]
