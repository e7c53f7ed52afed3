"""Methods outside the usual taxonomies: continuous color mapping and consensus bins."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from ..errors import BinCountMismatch, TooFewMethods
from ..methodspec import MethodSpec
from ..result import BinningResult, build_result
from ..series import FeatureSeries
from ._util import degenerate_result


def unclassed(series: FeatureSeries) -> BinningResult:
    """No bins at all: each value maps to its normalized position in [0, 1]."""
    spec = MethodSpec("unclassed")
    deg = degenerate_result(series, spec)
    if deg is not None:
        positions = {
            fid: (None if series.missing_mask[i] else 0.0)
            for i, fid in enumerate(series.feature_ids)
        }
        return BinningResult(
            method=deg.method,
            extents=deg.extents,
            bin_sizes=deg.bin_sizes,
            assignments=deg.assignments,
            notes=deg.notes,
            unclassed_positions=positions,
        )
    lo, hi = series.data_min(), series.data_max()
    span = hi - lo
    positions = {}
    for i, fid in enumerate(series.feature_ids):
        if series.missing_mask[i]:
            positions[fid] = None
        else:
            positions[fid] = (float(series.values[i]) - lo) / span
    base = build_result(series, spec, [lo, hi])
    return BinningResult(
        method=base.method,
        extents=base.extents,
        bin_sizes=base.bin_sizes,
        assignments=base.assignments,
        notes=base.notes,
        unclassed_positions=positions,
    )


def majority_vote(bins: Sequence[int]) -> tuple[int, int]:
    """(most frequent bin id, its frequency); frequency ties go to the lowest id."""
    counts = Counter(bins)
    top = max(counts.values())
    winner = min(b for b, c in counts.items() if c == top)
    return winner, top


def resiliency_from_members(
    series: FeatureSeries,
    member_results: Sequence[tuple[str, BinningResult]],
    expected_k: int,
    spec: MethodSpec,
) -> BinningResult:
    """Consensus bins from already-computed member results.

    Each feature votes with its per-method bin ids; breaks fall at midpoints
    between value-sorted neighbors whose majority bins differ. A majority bin
    that drops while scanning upward is folded into the run before it.
    """
    if len(member_results) < 2:
        raise TooFewMethods(f"resiliency needs >= 2 member methods, got {len(member_results)}")
    for method_id, result in member_results:
        if result.bin_count != expected_k:
            raise BinCountMismatch(
                f"{method_id} produced {result.bin_count} bins, expected {expected_k}",
                method_id=method_id,
                actual_k=result.bin_count,
            )
    valid = [
        (i, fid)
        for i, fid in enumerate(series.feature_ids)
        if not series.missing_mask[i]
    ]
    majorities: dict[str, int] = {}
    for _, fid in valid:
        row = [result.assignments[fid] for _, result in member_results]
        majorities[fid] = majority_vote(row)[0]

    ordered = sorted(valid, key=lambda item: float(series.values[item[0]]))
    notes: list[str] = []
    breaks: list[float] = []
    run_bin: int | None = None
    prev_value: float | None = None
    for i, fid in ordered:
        value = float(series.values[i])
        bin_id = majorities[fid]
        if run_bin is None:
            run_bin = bin_id
        elif bin_id > run_bin:
            breaks.append((prev_value + value) / 2.0)
            run_bin = bin_id
        elif bin_id < run_bin:
            notes.append(
                f"NonMonotoneRun: {fid} majority bin {bin_id} below current run "
                f"{run_bin}, merged into the earlier run"
            )
        prev_value = value
    extents = [series.data_min()] + breaks + [series.data_max()]
    return build_result(series, spec, extents, notes)
