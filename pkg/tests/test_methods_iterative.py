from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from binx.errors import InvalidThreshold, KExceedsDistinct
from binx.methods import ckmeans, head_tail_breaks, natural_breaks
from binx.methods.iterative import partition_sdcm
from binx.series import FeatureSeries


def _series(values):
    return FeatureSeries([f"f{i}" for i in range(len(values))], values)


def brute_force_min_sdcm(values, k):
    """Exhaustive oracle: try every contiguous index partition of the sorted values."""
    data = sorted(values)
    n = len(data)

    def sse(chunk):
        m = sum(chunk) / len(chunk)
        return sum((x - m) ** 2 for x in chunk)

    best = math.inf
    for cuts in itertools.combinations(range(1, n), k - 1):
        edges = (0, *cuts, n)
        total = sum(sse(data[edges[i]:edges[i + 1]]) for i in range(k))
        best = min(best, total)
    return best


class TestOptimalPartitions:
    def test_obvious_two_cluster_split(self):
        r = natural_breaks(_series([1, 2, 10, 11]), 2)
        assert r.extents == (1, 6, 11)

    def test_k_equals_distinct_count(self):
        r = natural_breaks(_series([1, 5, 9]), 3)
        assert r.extents == (1, 3, 7, 9)
        assert r.bin_sizes == (1, 1, 1)

    def test_matches_exhaustive_search(self):
        rng = np.random.default_rng(42)
        values = rng.integers(0, 21, size=12).astype(float).tolist()
        for k in (2, 3):
            r = natural_breaks(_series(values), k)
            got = partition_sdcm(np.asarray(values), r.extents)
            best = brute_force_min_sdcm(values, k)
            assert got == pytest.approx(best, rel=1e-9, abs=1e-12)

    def test_ckmeans_equals_natural_breaks_everywhere(self):
        rng = np.random.default_rng(3)
        for _ in range(60):
            n = int(rng.integers(2, 30))
            values = rng.integers(0, 15, size=n).astype(float).tolist()
            distinct = len(set(values))
            k = int(rng.integers(1, min(distinct, 6) + 1))
            a = natural_breaks(_series(values), k)
            b = ckmeans(_series(values), k)
            assert a.extents == b.extents
            assert a.bin_sizes == b.bin_sizes

    def test_negative_cluster_case(self):
        r = ckmeans(_series([-5, -4, 0, 4, 5]), 3)
        assert r.bin_sizes == (2, 1, 2)
        assert r.extents == (-5, -2, 2, 5)

    def test_never_splits_duplicates(self):
        r = natural_breaks(_series([0, 5, 5, 10]), 2)
        # concave split cost: an extreme (unsplit) grouping is always optimal
        assert r.extents == (0, 2.5, 10)

    def test_k_exceeding_distinct_rejected(self):
        with pytest.raises(KExceedsDistinct):
            natural_breaks(_series([1, 1, 2]), 3)

    def test_sdcm_not_above_other_methods(self, sample_series):
        from binx.methods import equal_interval, quantile

        values = sample_series.valid_values
        for k in (4, 5, 6):
            optimal = partition_sdcm(values, natural_breaks(sample_series, k).extents)
            assert optimal <= partition_sdcm(values, equal_interval(sample_series, k).extents) + 1e-9
            assert optimal <= partition_sdcm(values, quantile(sample_series, k).extents) + 1e-9


def head_tail_oracle(values, threshold):
    """Independent simulation of the recursion; returns the recorded breaks."""
    subset = list(values)
    breaks = []
    while True:
        mean = sum(subset) / len(subset)
        head = [v for v in subset if v > mean]
        if not head or len(head) / len(subset) >= threshold:
            return breaks
        breaks.append(mean)
        if len(head) <= 1:
            return breaks
        subset = head


class TestHeadTailBreaks:
    def test_single_split_then_tiny_head(self):
        r = head_tail_breaks(_series([1, 1, 1, 1, 10]))
        assert r.extents == (1, 2.8, 10)

    def test_uniform_halts_before_first_split(self):
        r = head_tail_breaks(_series(list(range(1, 11))))
        assert r.extents == (1, 10)
        assert r.bin_count == 1

    def test_power_law_matches_simulation(self, pareto_series):
        r = head_tail_breaks(pareto_series)
        expected = head_tail_oracle(pareto_series.valid_values.tolist(), 0.4)
        assert list(r.interior_breaks) == pytest.approx(expected, rel=1e-12)
        assert r.bin_count >= 3
        sizes = list(r.bin_sizes)
        assert all(sizes[i] > sizes[i + 1] for i in range(len(sizes) - 1))

    def test_terminates_within_log_bound(self, pareto_series):
        r = head_tail_breaks(pareto_series)
        n = pareto_series.valid_count
        assert r.bin_count <= math.ceil(math.log2(n)) + 1

    def test_threshold_bounds(self):
        with pytest.raises(InvalidThreshold):
            head_tail_breaks(_series([1, 2]), 0.0)
        with pytest.raises(InvalidThreshold):
            head_tail_breaks(_series([1, 2]), 1.0)
