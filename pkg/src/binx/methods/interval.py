"""Arithmetically generated breaks: equal/defined/geometric width, size targets, gaps."""

from __future__ import annotations

import math

import numpy as np

from ..errors import (
    InvalidBinCount,
    InvalidGrowth,
    InvalidIntervalSize,
    NotEnoughDistinctValues,
    TooManyBins,
)
from ..methodspec import MethodSpec
from ..result import BinningResult, build_result
from ..series import FeatureSeries
from ._util import (
    MAX_BINS,
    STEP_EPS,
    degenerate_result,
    drop_out_of_range_breaks,
    largest_remainder_sizes,
)


def equal_interval(series: FeatureSeries, k: int = 5) -> BinningResult:
    """k bins of identical width spanning [min, max]."""
    if k < 1:
        raise InvalidBinCount(f"bin count must be >= 1, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    spec = MethodSpec("equal_interval", bin_count=k)
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    lo, hi = series.data_min(), series.data_max()
    width = (hi - lo) / k
    extents = [lo + i * width for i in range(k)] + [hi]
    return build_result(series, spec, extents)


def defined_interval(series: FeatureSeries, size: float) -> BinningResult:
    """Bins of a fixed width from the minimum; the last bin may be narrower."""
    if size is None or size <= 0:
        raise InvalidIntervalSize(f"interval size must be positive, got {size}")
    spec = MethodSpec("defined_interval", defined_interval_size=float(size))
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    lo, hi = series.data_min(), series.data_max()
    ratio = (hi - lo) / size
    k = max(1, math.ceil(ratio - STEP_EPS))
    if k > MAX_BINS:
        raise TooManyBins(f"interval size {size} would create {k} bins (cap {MAX_BINS})")
    extents = [lo + i * size for i in range(k)] + [hi]
    return build_result(series, spec, extents)


def geometric_interval(series: FeatureSeries, k: int = 5) -> BinningResult:
    """Breaks in geometric progression between min and max (equal ratios).

    Non-positive minima are handled by shifting the series to start at 1,
    computing the progression, and shifting the extents back.
    """
    if k < 1:
        raise InvalidBinCount(f"bin count must be >= 1, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    spec = MethodSpec("geometric_interval", bin_count=k)
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    lo, hi = series.data_min(), series.data_max()
    notes: list[str] = []
    shift = 0.0
    if lo <= 0:
        shift = 1.0 - lo
        notes.append(f"Shifted: non-positive minimum {lo!r} offset by {shift!r}")
    ratio = (hi + shift) / (lo + shift)
    extents = [(lo + shift) * ratio ** (i / k) - shift for i in range(1, k)]
    return build_result(series, spec, [lo] + extents + [hi], notes)


def exponential_bin_sizes(
    series: FeatureSeries, k: int = 5, growth: float = 2.0
) -> BinningResult:
    """Bin populations growing by a constant factor from the lowest bin up.

    Target sizes proportional to growth^(j-1) are realized with
    largest-remainder rounding; breaks sit midway between the order statistics
    on either side of each target boundary.
    """
    if k < 1:
        raise InvalidBinCount(f"bin count must be >= 1, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    if growth is None or growth <= 1:
        raise InvalidGrowth(f"growth factor must exceed 1, got {growth}")
    spec = MethodSpec("exponential_bin_sizes", bin_count=k, exp_growth=float(growth))
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    values = series.sorted_valid()
    n = values.size
    targets = largest_remainder_sizes(n, [growth**j for j in range(k)])
    raw_breaks: list[float] = []
    boundary = 0
    for size in targets[:-1]:
        boundary += size
        if boundary == 0 or boundary == n:
            raw_breaks.append(float("nan"))  # empty edge bin, dropped below
            continue
        raw_breaks.append(float(values[boundary - 1] + values[boundary]) / 2.0)
    notes: list[str] = []
    lo, hi = float(values[0]), float(values[-1])
    clean = drop_out_of_range_breaks(
        [b for b in raw_breaks if not math.isnan(b)], lo, hi, notes, label="SizeBreak"
    )
    if len(clean) < len(raw_breaks):
        notes.append("BinCountReduced: duplicate or empty size boundaries merged")
    return build_result(series, spec, [lo] + clean + [hi], notes)


def maximum_breaks(series: FeatureSeries, k: int = 5) -> BinningResult:
    """Breaks at the midpoints of the k-1 widest gaps between distinct values."""
    if k < 2:
        raise InvalidBinCount(f"maximum breaks needs k >= 2, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    spec = MethodSpec("maximum_breaks", bin_count=k)
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    distinct = np.unique(series.valid_values)
    if distinct.size < k:
        raise NotEnoughDistinctValues(
            f"need at least {k} distinct values, got {distinct.size}"
        )
    gaps = np.diff(distinct)
    # stable sort on negated gaps: ties resolve to the leftmost gap
    chosen = np.sort(np.argsort(-gaps, kind="stable")[: k - 1])
    breaks = [float(distinct[i] + distinct[i + 1]) / 2.0 for i in chosen]
    extents = [float(distinct[0])] + breaks + [float(distinct[-1])]
    return build_result(series, spec, extents)
