"""Legibility-first methods: user-specified boundaries and round-number steps."""

from __future__ import annotations

import math

import numpy as np

from ..errors import InvalidBinCount, NonMonotoneBreaks, TooManyBins
from ..methodspec import MethodSpec
from ..result import BinningResult, build_result
from ..series import FeatureSeries
from ._util import MAX_BINS, STEP_EPS, degenerate_result

_NICE_MANTISSAS = (1.0, 2.0, 5.0)


def manual_interval(
    series: FeatureSeries, breaks, spec: MethodSpec | None = None
) -> BinningResult:
    """Bins bounded by user-chosen break values.

    The break list may be interior breaks only or a full exported extent list;
    either way the extents are extended to cover the data range, and breaks
    that coincide with the outer extents are dropped with a note.
    """
    if breaks is None or len(breaks) == 0:
        raise NonMonotoneBreaks("manual interval requires at least one break")
    bks = [float(b) for b in breaks]
    if any(bks[i] >= bks[i + 1] for i in range(len(bks) - 1)):
        raise NonMonotoneBreaks(f"breaks not strictly increasing: {bks}")
    if len(bks) > MAX_BINS:
        raise TooManyBins(f"{len(bks)} breaks exceed cap {MAX_BINS}")
    if spec is None:
        spec = MethodSpec("manual_interval", manual_breaks=tuple(bks))
    lo = min(bks[0], series.data_min())
    hi = max(bks[-1], series.data_max())
    notes: list[str] = []
    extents = [lo]
    for b in bks:
        if lo < b < hi:
            extents.append(b)
        elif b not in (lo, hi):
            notes.append(f"BreakDropped: {b!r} outside [{lo!r}, {hi!r}]")
        elif b == lo or b == hi:
            pass  # outer extent restated in the break list; nothing to add
    extents.append(hi)
    if len(extents) != len(bks) + 2 and not notes:
        notes.append("BreakDropped: break coincides with an outer extent")
    return build_result(series, spec, extents, notes)


def pretty_breaks(series: FeatureSeries, k: int = 5) -> BinningResult:
    """Round-number breaks: a 1/2/5 x 10^n step near range/k, snapped outward.

    The realized bin count may differ from the request; every extent is an
    integer multiple of the chosen step.
    """
    if k < 1:
        raise InvalidBinCount(f"bin count must be >= 1, got {k}")
    if k > MAX_BINS:
        raise TooManyBins(f"bin count {k} exceeds cap {MAX_BINS}")
    spec = MethodSpec("pretty_breaks", bin_count=k)
    deg = degenerate_result(series, spec)
    if deg is not None:
        return deg
    lo, hi = series.data_min(), series.data_max()
    target = (hi - lo) / k
    exponent = math.floor(math.log10(target))
    best_step = None
    best_diff = math.inf
    for n in (exponent - 1, exponent, exponent + 1):
        for mantissa in _NICE_MANTISSAS:
            step = mantissa * 10.0**n
            diff = abs(step - target)
            # strict < keeps the smaller candidate on ties (scan is ascending)
            if diff < best_diff:
                best_diff = diff
                best_step = (mantissa, n)
    mantissa, n = best_step
    i0 = math.floor(lo / (mantissa * 10.0**n) + STEP_EPS)
    i1 = math.ceil(hi / (mantissa * 10.0**n) - STEP_EPS)
    # extents built from decimal text so "0.2 * 3" renders as 0.6, not 0.6000...01
    extents = [_decimal_multiple(int(i * mantissa), n) for i in range(i0, i1 + 1)]
    return build_result(series, spec, extents)


def _decimal_multiple(mantissa_times_index: int, exponent: int) -> float:
    return float(f"{mantissa_times_index}e{exponent}")
