from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binx.errors import BinxError, EmptySeries, NonMonotoneExtents
from binx.methods import natural_breaks
from binx.result import assign, degenerate_extents
from binx.series import FeatureSeries


class TestFeatureSeries:
    def test_lengths_must_match(self):
        with pytest.raises(BinxError):
            FeatureSeries(["a", "b"], [1.0])

    def test_duplicate_ids_rejected(self):
        with pytest.raises(BinxError):
            FeatureSeries(["a", "a"], [1.0, 2.0])

    def test_infinite_values_rejected(self):
        with pytest.raises(BinxError):
            FeatureSeries(["a"], [float("inf")])

    def test_missing_values_masked(self):
        s = FeatureSeries(["a", "b", "c"], [1.0, None, float("nan")])
        assert s.valid_count == 1
        assert s.missing_count == 2
        assert list(s.missing_mask) == [False, True, True]

    def test_empty_series_raises_on_use(self):
        s = FeatureSeries(["a"], [None])
        with pytest.raises(EmptySeries):
            s.require_valid()


class TestAssign:
    def test_right_open_with_closed_top(self):
        # forced by the right-open rule; 10 == e_k lands in bin 5
        s = FeatureSeries(list("abcd"), [0, 2, 5, 10])
        assignments, sizes, notes = assign(s, [0, 2, 4, 6, 8, 10])
        assert assignments == {"a": 1, "b": 2, "c": 3, "d": 5}
        assert sizes == [1, 1, 1, 0, 1]
        assert notes == []

    def test_single_bin_identity(self):
        s = FeatureSeries(["x"], [7.0])
        assignments, sizes, _ = assign(s, [0, 10])
        assert assignments == {"x": 1}
        assert sizes == [1]

    def test_sizes_recount_against_assignments(self, sample_series):
        # independent oracle: recount the returned assignments per bin
        result = natural_breaks(sample_series, 5)
        recount = [0] * result.bin_count
        for fid, j in result.assignments.items():
            if j is not None:
                recount[j - 1] += 1
        assert list(result.bin_sizes) == recount
        assert sum(result.bin_sizes) == sample_series.valid_count

    def test_values_on_breaks_go_up(self):
        s = FeatureSeries(list("ab"), [2.0, 4.0])
        assignments, _, _ = assign(s, [0.0, 2.0, 4.0, 6.0])
        assert assignments == {"a": 2, "b": 3}

    def test_out_of_range_clamps_with_note(self):
        s = FeatureSeries(list("ab"), [-1.0, 99.0])
        assignments, sizes, notes = assign(s, [0.0, 5.0, 10.0])
        assert assignments == {"a": 1, "b": 2}
        assert sizes == [1, 1]
        assert len(notes) == 2
        assert all(n.startswith("OutOfRange") for n in notes)

    def test_missing_values_get_none(self):
        s = FeatureSeries(list("ab"), [1.0, None])
        assignments, sizes, _ = assign(s, [0.0, 2.0])
        assert assignments == {"a": 1, "b": None}
        assert sizes == [1]

    def test_non_monotone_extents_rejected(self):
        s = FeatureSeries(["a"], [1.0])
        with pytest.raises(NonMonotoneExtents):
            assign(s, [0.0, 5.0, 5.0])

    def test_empty_series_rejected(self):
        s = FeatureSeries(["a"], [None])
        with pytest.raises(EmptySeries):
            assign(s, [0.0, 1.0])

    @given(
        values=st.lists(
            st.floats(min_value=-100, max_value=100, allow_nan=False), min_size=1, max_size=40
        ),
        interior=st.lists(
            st.floats(min_value=-99, max_value=99, allow_nan=False),
            min_size=0,
            max_size=6,
            unique=True,
        ),
    )
    @settings(max_examples=150, deadline=None)
    def test_total_on_clamped_inputs(self, values, interior):
        s = FeatureSeries([f"f{i}" for i in range(len(values))], values)
        extents = sorted(set([-100.0, 100.0] + list(interior)))
        assignments, sizes, _ = assign(s, extents)
        assert sum(sizes) == s.valid_count
        assert all(1 <= j <= len(extents) - 1 for j in assignments.values())


def test_degenerate_extents_strictly_increase():
    for v in (0.0, 1.0, -3.5, 1e12, -1e-12):
        lo, hi = degenerate_extents(v)
        assert lo < hi
        assert lo == v


def test_permutation_invariance(sample_series):
    rng = np.random.default_rng(7)
    order = rng.permutation(len(sample_series))
    shuffled = sample_series.permuted(order.tolist())
    a = natural_breaks(sample_series, 5)
    b = natural_breaks(shuffled, 5)
    assert a.extents == b.extents
    assert a.bin_sizes == b.bin_sizes
    assert a.assignments == b.assignments  # same id->bin map, different order
