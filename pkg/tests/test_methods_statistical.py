from __future__ import annotations

import math

import numpy as np
import pytest

from binx.errors import InvalidBinCount, InvalidIqrFactor, InvalidStep
from binx.methods import box_plot, percentile, quantile, std_deviation
from binx.series import FeatureSeries


def _series(values):
    return FeatureSeries([f"f{i}" for i in range(len(values))], values)


def quantile_oracle(sorted_values, p):
    """Inclusive linear interpolation by hand: h = (n-1)p + 1 over 1-based stats."""
    n = len(sorted_values)
    h = (n - 1) * p + 1
    lo = math.floor(h)
    hi = min(lo + 1, n)
    frac = h - lo
    return sorted_values[lo - 1] + frac * (sorted_values[hi - 1] - sorted_values[lo - 1])


class TestQuantile:
    def test_one_to_ten_k5(self):
        r = quantile(_series(list(range(1, 11))), 5)
        assert r.interior_breaks == (2.8, 4.6, 6.3999999999999995, 8.2)
        assert r.bin_sizes == (2, 2, 2, 2, 2)

    def test_k1(self):
        r = quantile(_series([4, 9, 2]), 1)
        assert r.extents == (2, 9)

    def test_duplicate_dominated_break(self):
        # h = 3 interpolates onto the duplicated minimum; the repair keeps k=2
        # by cutting midway to the next distinct value, leaving {4, 1}
        r = quantile(_series([1, 1, 1, 1, 2]), 2)
        assert r.extents == (1, 1.5, 2)
        assert r.bin_sizes == (4, 1)
        assert any("BreakAdjusted" in n for n in r.notes)

    def test_breaks_match_hand_rolled_interpolation(self, sample_series):
        r = quantile(sample_series, 4)
        values = sorted(sample_series.valid_values.tolist())
        for i, b in enumerate(r.interior_breaks, start=1):
            assert b == pytest.approx(quantile_oracle(values, i / 4), rel=1e-12)

    def test_kept_interpolated_break_on_straddle(self):
        # interpolation lands on the duplicated 2; kept as-is, sizes unbalance
        r = quantile(_series([1, 2, 2, 2, 3]), 2)
        assert r.interior_breaks == (2.0,)
        assert r.bin_sizes == (1, 4)

    def test_invalid_k(self):
        with pytest.raises(InvalidBinCount):
            quantile(_series([1, 2]), 0)


class TestPercentile:
    def test_always_six_bins(self, sample_series):
        assert percentile(sample_series).bin_count == 6

    def test_uniform_grid_oracle(self):
        # inclusive-interpolation oracle over 0..999
        r = percentile(_series([float(v) for v in range(1000)]))
        assert r.interior_breaks == pytest.approx(
            (9.99, 99.9, 499.5, 899.1, 989.01), rel=1e-12
        )

    def test_constant_series_degenerates(self):
        r = percentile(_series([5.0, 5.0, 5.0]))
        assert r.bin_count == 1

    def test_duplicate_heavy_keeps_six_with_notes(self):
        r = percentile(_series([1.0] * 30 + [2.0]))
        assert r.bin_count == 6
        assert any("BreakAdjusted" in n for n in r.notes)


class TestBoxPlot:
    def test_no_outliers_drops_hinges(self):
        # quartile oracle: Q1=2.75, Q2=4.5, Q3=6.25, hinges -2.5/11.5 clamp away
        r = box_plot(_series(list(range(1, 9))))
        assert r.interior_breaks == (2.75, 4.5, 6.25)
        assert r.bin_count == 4
        assert sum("HingeRemoved" in n for n in r.notes) == 2

    def test_outliers_on_both_sides_keep_six(self, sample_series):
        r = box_plot(sample_series)
        assert r.bin_count == 6
        assert not r.notes

    def test_small_factor_tightens_hinges(self):
        values = [0.0, *range(40, 61), 100.0]
        wide = box_plot(_series(values), iqr_factor=1.5)
        tight = box_plot(_series(values), iqr_factor=0.1)
        q1 = quantile_oracle(sorted(values), 0.25)
        q3 = quantile_oracle(sorted(values), 0.75)
        iqr = q3 - q1
        assert tight.interior_breaks[0] == pytest.approx(q1 - 0.1 * iqr)
        assert wide.interior_breaks[0] == pytest.approx(q1 - 1.5 * iqr)
        assert tight.interior_breaks[0] > wide.interior_breaks[0]

    def test_quartiles_match_oracle(self, sample_series):
        r = box_plot(sample_series)
        values = sorted(sample_series.valid_values.tolist())
        q1 = quantile_oracle(values, 0.25)
        q2 = quantile_oracle(values, 0.5)
        q3 = quantile_oracle(values, 0.75)
        iqr = q3 - q1
        assert r.interior_breaks == pytest.approx(
            (q1 - 1.5 * iqr, q1, q2, q3, q3 + 1.5 * iqr), rel=1e-12
        )

    def test_invalid_factor(self):
        with pytest.raises(InvalidIqrFactor):
            box_plot(_series([1, 2]), 0)


class TestStdDeviation:
    def test_even_k_whole(self):
        # sigma = 2 for this symmetric set; breaks at mean + {-1,0,1} sigma
        s = _series([-3, -2, -1, 0, 1, 2, 3])
        r = std_deviation(s, 4, "whole")
        assert r.interior_breaks == (-2.0, 0.0, 2.0)

    def test_even_k_half(self):
        s = _series([-3, -2, -1, 0, 1, 2, 3])
        r = std_deviation(s, 4, "half")
        assert r.interior_breaks == (-1.0, 0.0, 1.0)

    def test_odd_k_centers_mean(self):
        s = _series([-3, -2, -1, 0, 1, 2, 3])
        r = std_deviation(s, 3, "whole")
        assert r.interior_breaks == (-1.0, 1.0)

    def test_sample_breaks_match_recomputed_moments(self, sample_series):
        # oracle: recompute mean and population sigma independently
        r = std_deviation(sample_series, 6)
        values = sample_series.valid_values
        mean = float(np.mean(values))
        sigma = math.sqrt(float(np.mean((values - mean) ** 2)))
        expected = [mean + m * sigma for m in (-2, -1, 0, 1, 2)]
        kept = [b for b in expected if sample_series.data_min() < b < sample_series.data_max()]
        assert list(r.interior_breaks) == pytest.approx(kept, rel=1e-12)

    def test_zero_variance_degenerates(self):
        r = std_deviation(_series([5.0, 5.0]), 4)
        assert r.bin_count == 1

    def test_k_below_two_rejected(self):
        with pytest.raises(InvalidBinCount):
            std_deviation(_series([1, 2]), 1)

    def test_bad_step(self):
        with pytest.raises(InvalidStep):
            std_deviation(_series([1, 2]), 4, "third")
