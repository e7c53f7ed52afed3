"""Objective-driven methods: exact 1-D SSE partitioning and recursive mean splits."""

from __future__ import annotations

import math

import numpy as np

from ..errors import BinxError, InvalidBinCount, InvalidThreshold, KExceedsDistinct, TooManyBins
from ..methodspec import MethodSpec
from ..result import BinningResult, build_result
from ..series import FeatureSeries
from ._util import MAX_BINS, degenerate_result

# the exact k*m^2 dynamic program keeps an O(m) cost row per step; above this
# size the quadratic scan is no longer tractable
MAX_DP_VALUES = 100_000


def optimal_partition(distinct: np.ndarray, weights: np.ndarray, k: int) -> list[int]:
    """Exact minimal within-group SSE partition of sorted weighted values.

    Returns the k-1 split points as indices into ``distinct``: group g covers
    distinct[splits[g-1]:splits[g]]. Cost ties resolve to the leftmost split
    at every level, so the result is deterministic.
    """
    m = distinct.size
    if k == 1:
        return []
    if k == m:
        return list(range(1, m))
    x = distinct - distinct.mean()  # centering stabilizes the cost differences
    w = weights.astype(float)
    cw = np.concatenate(([0.0], np.cumsum(w)))
    cwx = np.concatenate(([0.0], np.cumsum(w * x)))
    cwxx = np.concatenate(([0.0], np.cumsum(w * x * x)))

    def segment_cost(starts: np.ndarray, end: int) -> np.ndarray:
        # cost of grouping distinct[s:end] for each s in starts
        weight = cw[end] - cw[starts]
        total = cwx[end] - cwx[starts]
        return (cwxx[end] - cwxx[starts]) - total * total / weight

    best = np.empty(m + 1)
    best[0] = np.inf
    best[1:] = cwxx[1:] - cwx[1:] * cwx[1:] / cw[1:]  # single group over a prefix
    back: list[np.ndarray] = []
    for j in range(2, k + 1):
        nxt = np.full(m + 1, np.inf)
        arg = np.zeros(m + 1, dtype=int)
        for i in range(j, m + 1):
            starts = np.arange(j - 1, i)
            totals = best[starts] + segment_cost(starts, i)
            at = int(np.argmin(totals))  # argmin returns the first minimum
            nxt[i] = totals[at]
            arg[i] = starts[at]
        best = nxt
        back.append(arg)
    splits: list[int] = []
    i = m
    for arg in reversed(back):
        i = int(arg[i])
        splits.append(i)
    splits.reverse()
    return splits


def partition_sdcm(values: np.ndarray, extents: list[float] | tuple[float, ...]) -> float:
    """Sum of squared deviations from class means for values grouped by extents."""
    arr = np.sort(np.asarray(values, dtype=float))
    idx = np.clip(np.searchsorted(extents, arr, side="right"), 1, len(extents) - 1)
    total = 0.0
    for j in range(1, len(extents)):
        group = arr[idx == j]
        if group.size:
            total += float(((group - group.mean()) ** 2).sum())
    return total


def _sse_breaks(series: FeatureSeries, spec: MethodSpec, k: int) -> BinningResult:
    if k < 1:
        raise InvalidBinCount(f"bin count must be >= 1, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    deg = degenerate_result(series, spec)
    if deg is not None:
        if k > 1:
            raise KExceedsDistinct(f"k={k} exceeds 1 distinct value")
        return deg
    values = series.valid_values
    if values.size > MAX_DP_VALUES:
        raise BinxError(
            f"exact optimizer capped at {MAX_DP_VALUES} values, got {values.size}"
        )
    distinct, weights = np.unique(values, return_counts=True)
    if k > distinct.size:
        raise KExceedsDistinct(f"k={k} exceeds {distinct.size} distinct values")
    splits = optimal_partition(distinct, weights, k)
    breaks = [float(distinct[s - 1] + distinct[s]) / 2.0 for s in splits]
    extents = [float(distinct[0])] + breaks + [float(distinct[-1])]
    return build_result(series, spec, extents)


def natural_breaks(series: FeatureSeries, k: int = 5) -> BinningResult:
    """Groups minimizing total within-group squared deviation (exact optimum)."""
    return _sse_breaks(series, MethodSpec("natural_breaks", bin_count=k), k)


def ckmeans(series: FeatureSeries, k: int = 5) -> BinningResult:
    """Order-constrained k-means on one dimension; same exact objective as
    natural breaks, listed separately in the catalog."""
    return _sse_breaks(series, MethodSpec("ckmeans", bin_count=k), k)


def head_tail_breaks(series: FeatureSeries, threshold: float = 0.4) -> BinningResult:
    """Recursive mean splits for heavy-tailed data.

    Each iteration records the subset mean as a break and recurses into the
    head (values above the mean) while the head stays a minority of the
    subset; the bin count falls out of the data.
    """
    if threshold is None or not 0 < threshold < 1:
        raise InvalidThreshold(f"threshold must be in (0, 1), got {threshold}")
    spec = MethodSpec("head_tail_breaks", head_tail_threshold=float(threshold))
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    subset = series.valid_values
    breaks: list[float] = []
    while True:
        mean = float(subset.mean())
        head = subset[subset > mean]
        if head.size == 0 or head.size / subset.size >= threshold:
            break
        breaks.append(mean)
        if head.size <= 1:
            break
        subset = head
    extents = [series.data_min()] + breaks + [series.data_max()]
    return build_result(series, spec, extents)
