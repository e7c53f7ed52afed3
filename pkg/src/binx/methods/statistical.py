"""Breaks from summary statistics: quantiles, percentiles, box-plot hinges, sigma steps."""

from __future__ import annotations

import numpy as np

from ..errors import InvalidBinCount, InvalidIqrFactor, InvalidStep, TooManyBins
from ..methodspec import MethodSpec
from ..result import BinningResult, build_result, degenerate_extents
from ..series import FeatureSeries
from ._util import (
    MAX_BINS,
    degenerate_result,
    drop_out_of_range_breaks,
    inclusive_quantile,
    repair_breaks_keep_count,
)

PERCENTILE_CUTS = (0.01, 0.10, 0.50, 0.90, 0.99)


def quantile(series: FeatureSeries, k: int = 5) -> BinningResult:
    """Approximately equal bin populations; breaks at the i/k quantiles.

    Duplicate values never get split across bins: a break that interpolation
    lands on an earlier boundary is nudged up to the next distinct value's
    midpoint, which can leave bins unbalanced (and is noted on the result).
    """
    if k < 1:
        raise InvalidBinCount(f"bin count must be >= 1, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    spec = MethodSpec("quantile", bin_count=k)
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    values = series.sorted_valid()
    raw = [inclusive_quantile(values, i / k) for i in range(1, k)]
    notes: list[str] = []
    breaks = repair_breaks_keep_count(
        raw, float(values[0]), float(values[-1]), np.unique(values), notes
    )
    return build_result(
        series, spec, [float(values[0])] + breaks + [float(values[-1])], notes
    )


def percentile(series: FeatureSeries) -> BinningResult:
    """Six bins cut at the 1st, 10th, 50th, 90th and 99th percentiles."""
    spec = MethodSpec("percentile")
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    values = series.sorted_valid()
    raw = [inclusive_quantile(values, p) for p in PERCENTILE_CUTS]
    notes: list[str] = []
    breaks = repair_breaks_keep_count(
        raw, float(values[0]), float(values[-1]), np.unique(values), notes
    )
    return build_result(
        series, spec, [float(values[0])] + breaks + [float(values[-1])], notes
    )


def box_plot(series: FeatureSeries, iqr_factor: float = 1.5) -> BinningResult:
    """Six bins from the quartiles plus lower/upper hinges at factor * IQR.

    Hinges (and any interior break) falling outside the open data range are
    removed with a note, so outlier-free data yields fewer than six bins.
    """
    if iqr_factor is None or iqr_factor <= 0:
        raise InvalidIqrFactor(f"IQR factor must be positive, got {iqr_factor}")
    spec = MethodSpec("box_plot", iqr_factor=float(iqr_factor))
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    values = series.sorted_valid()
    q1 = inclusive_quantile(values, 0.25)
    q2 = inclusive_quantile(values, 0.50)
    q3 = inclusive_quantile(values, 0.75)
    iqr = q3 - q1
    raw = [q1 - iqr_factor * iqr, q1, q2, q3, q3 + iqr_factor * iqr]
    notes: list[str] = []
    breaks = drop_out_of_range_breaks(
        raw, float(values[0]), float(values[-1]), notes, label="Hinge"
    )
    return build_result(
        series, spec, [float(values[0])] + breaks + [float(values[-1])], notes
    )


def std_deviation(series: FeatureSeries, k: int = 5, step: str = "whole") -> BinningResult:
    """Breaks at whole or half standard deviations around the mean.

    Even k puts a break on the mean itself; odd k centers the middle bin on
    it. Breaks landing outside the data range are dropped with a note.
    Population (not sample) standard deviation, matching the profile stats.
    """
    if k < 2:
        raise InvalidBinCount(f"standard deviation binning needs k >= 2, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    if step not in ("whole", "half"):
        raise InvalidStep(f"step must be 'whole' or 'half', got {step!r}")
    spec = MethodSpec("std_deviation", bin_count=k, std_dev_step=step)
    deg = degenerate_result(series, spec)  # covers the zero-variance case
    if deg is not None:
        return deg
    values = series.valid_values
    mean = float(values.mean())
    sigma = float(values.std())  # population
    scale = 1.0 if step == "whole" else 0.5
    if k % 2 == 0:
        multipliers = [m for m in range(-(k // 2 - 1), k // 2)]
    else:
        half = (k - 1) // 2
        multipliers = [m + 0.5 for m in range(-half, half)]
    raw = [mean + m * scale * sigma for m in multipliers]
    notes: list[str] = []
    lo, hi = float(values.min()), float(values.max())
    breaks = drop_out_of_range_breaks(raw, lo, hi, notes, label="SigmaBreak")
    return build_result(series, spec, [lo] + breaks + [hi], notes)
