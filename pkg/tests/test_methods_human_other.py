from __future__ import annotations

import math

import pytest

from binx.errors import (
    BinCountMismatch,
    NonMonotoneBreaks,
    TooFewMethods,
    UnknownMethod,
)
from binx.methods import (
    equal_interval,
    majority_vote,
    manual_interval,
    pretty_breaks,
    resiliency,
    run_all,
    run_method,
    unclassed,
)
from binx.methodspec import MethodSpec, default_member_methods
from binx.series import FeatureSeries


def _series(values):
    return FeatureSeries([f"f{i}" for i in range(len(values))], values)


class TestPrettyBreaks:
    def test_step_20_covers_3_97(self):
        r = pretty_breaks(_series([3, 50, 97]), 5)
        assert r.extents == (0, 20, 40, 60, 80, 100)

    def test_unit_interval_step_02(self):
        r = pretty_breaks(_series([0, 0.4, 1.0]), 5)
        assert r.extents == (0, 0.2, 0.4, 0.6, 0.8, 1.0)

    def test_step_chosen_by_closeness(self, sample_series):
        # enumerate candidate steps and pick argmin |step - range/k| by hand
        r = pretty_breaks(sample_series, 5)
        target = (sample_series.data_max() - sample_series.data_min()) / 5
        candidates = [m * 10.0**n for n in (-1, 0, 1) for m in (1, 2, 5)]
        best = min(candidates, key=lambda s: (abs(s - target), s))
        assert best == 5
        assert r.extents == (60, 65, 70, 75, 80, 85)

    def test_extents_are_step_multiples(self, sample_series):
        for k in (3, 5, 7, 9):
            r = pretty_breaks(sample_series, k)
            step = r.extents[1] - r.extents[0]
            mantissa = step / (10 ** math.floor(math.log10(step)))
            assert min(abs(mantissa - m) for m in (1, 2, 5, 10)) < 1e-9
            for e in r.extents:
                assert abs(e / step - round(e / step)) < 1e-6

    def test_realized_count_may_differ(self, sample_series):
        assert pretty_breaks(sample_series, 6).bin_count != 6


class TestManualInterval:
    def test_single_break_two_bins(self):
        r = manual_interval(_series([0, 3, 7, 10]), [5])
        assert r.extents == (0, 5, 10)
        assert r.bin_sizes == (2, 2)

    def test_matches_equal_interval_by_construction(self):
        s = _series([float(v) for v in range(11)])
        manual = manual_interval(s, [2, 4, 6, 8])
        equal = equal_interval(s, 5)
        assert manual.extents == equal.extents
        assert manual.assignments == equal.assignments

    def test_full_extent_list_reimport(self, sample_series):
        base = equal_interval(sample_series, 5)
        again = manual_interval(sample_series, list(base.extents))
        assert again.extents == base.extents
        assert again.assignments == base.assignments

    def test_breaks_beyond_data_extend_extents(self):
        r = manual_interval(_series([0, 5, 10]), [-5, 6])
        assert r.extents == (-5, 6, 10)
        assert r.bin_sizes == (2, 1)

    def test_non_monotone_rejected(self):
        with pytest.raises(NonMonotoneBreaks):
            manual_interval(_series([1, 2]), [5, 5])


class TestUnclassed:
    def test_endpoints_and_midpoint(self):
        r = unclassed(_series([0.0, 5.0, 10.0]))
        assert r.unclassed_positions == {"f0": 0.0, "f1": 0.5, "f2": 1.0}
        assert r.extents == (0.0, 10.0)

    def test_affine_invariance_of_positions(self):
        values = [3.0, 4.5, 8.0, 9.0]
        base = unclassed(_series(values))
        scaled = unclassed(_series([2 * v + 3 for v in values]))
        for fid in base.unclassed_positions:
            assert scaled.unclassed_positions[fid] == pytest.approx(
                base.unclassed_positions[fid], abs=1e-12
            )

    def test_missing_positions_are_none(self):
        r = unclassed(FeatureSeries(["a", "b"], [1.0, None]))
        assert r.unclassed_positions == {"a": 0.0, "b": None}
        # degenerate single valid value
        assert r.bin_count == 1


class TestMajorityVote:
    def test_scott_county_row(self):
        assert majority_vote([4, 6, 2, 5, 5, 4, 4, 5]) == (4, 3)

    def test_unanimous(self):
        assert majority_vote([1, 1, 1]) == (1, 3)

    def test_two_way_tie_lowest_wins(self):
        assert majority_vote([1, 2]) == (1, 1)


class TestResiliency:
    def test_unanimous_members_reproduce_member(self, sample_series):
        r = resiliency(sample_series, ("equal_interval", "equal_interval"), 6)
        member = equal_interval(sample_series, 6)
        assert r.assignments == member.assignments
        assert r.bin_sizes == member.bin_sizes

    def test_vote_then_scan_oracle(self):
        # independent oracle: recompute majority bins, then scan sorted values
        import numpy as np

        rng = np.random.default_rng(11)
        values = np.round(rng.normal(50, 12, size=200), 3).tolist()
        s = _series(values)
        r = resiliency(s, ("equal_interval", "quantile"), 5)

        from binx.methods import equal_interval as eq, quantile as qt

        members = [eq(s, 5), qt(s, 5)]
        majorities = {}
        for fid in s.feature_ids:
            row = [m.assignments[fid] for m in members]
            counts = {b: row.count(b) for b in row}
            top = max(counts.values())
            majorities[fid] = min(b for b, c in counts.items() if c == top)
        ordered = sorted(s.feature_ids, key=lambda f: s.value_of(f))
        breaks = []
        run = majorities[ordered[0]]
        for prev, cur in zip(ordered, ordered[1:]):
            b = majorities[cur]
            if b > run:
                breaks.append((s.value_of(prev) + s.value_of(cur)) / 2)
                run = b
            elif b < run:
                pass  # merged into the earlier run
        assert list(r.interior_breaks) == pytest.approx(breaks, rel=1e-12)

    def test_mixed_k_with_fixed_methods_rejected(self, sample_series):
        with pytest.raises(BinCountMismatch):
            resiliency(sample_series, ("equal_interval", "percentile"), 5)

    def test_too_few_members(self, sample_series):
        with pytest.raises(TooFewMethods):
            resiliency(sample_series, ("equal_interval",), 6)

    def test_member_miss_on_bin_count_is_reported(self):
        # box_plot without outliers cannot reach six bins
        s = _series([float(v) for v in range(1, 9)])
        with pytest.raises(BinCountMismatch) as err:
            resiliency(s, ("equal_interval", "box_plot"), 6)
        assert err.value.details.get("method_id") == "box_plot"

    def test_default_members(self):
        assert default_member_methods(6) == (
            "equal_interval",
            "quantile",
            "maximum_breaks",
            "natural_breaks",
            "ckmeans",
            "geometric_interval",
            "percentile",
            "box_plot",
        )
        assert "percentile" not in default_member_methods(5)


class TestRunMethod:
    def test_dispatch_matches_direct_call(self, sample_series):
        direct = equal_interval(sample_series, 5)
        routed = run_method(sample_series, MethodSpec("equal_interval", bin_count=5))
        assert routed == direct

    def test_irrelevant_params_ignored(self, sample_series):
        clean = run_method(sample_series, MethodSpec("equal_interval", bin_count=5))
        noisy = run_method(
            sample_series,
            MethodSpec(
                "equal_interval",
                bin_count=5,
                defined_interval_size=123.0,
                head_tail_threshold=0.9,
                iqr_factor=9.0,
            ),
        )
        assert noisy == clean
        assert noisy.method.to_json_dict() == {
            "methodId": "equal_interval",
            "binCount": 5,
        }

    def test_unknown_method(self, sample_series):
        with pytest.raises(UnknownMethod):
            run_method(sample_series, MethodSpec("voronoi"))

    def test_run_all_covers_catalog(self, sample_series):
        from binx.methodspec import BUILTIN_METHOD_IDS

        results = run_all(sample_series, bin_count=6)
        assert len(results) == 16
        assert set(results) == set(BUILTIN_METHOD_IDS)
