from __future__ import annotations

import numpy as np
import pytest

from binx.errors import (
    CannotRemoveOuterExtent,
    DuplicateName,
    InfeasibleConstraints,
    InvalidExtents,
    NonMonotoneResult,
    UnknownFeature,
)
from binx.methods import natural_breaks
from binx.reclassify import (
    PinConstraint,
    add_break,
    apply_pins,
    edit_breaks,
    misuse_warning,
    remove_break,
    set_break,
)
from binx.result import assign
from binx.series import FeatureSeries
from binx.stores import CustomMethodStore


def _series(values):
    return FeatureSeries([f"f{i}" for i in range(len(values))], values)


class TestEditBreaks:
    def test_add(self):
        assert add_break([0, 5, 10], 2) == (0, 2, 5, 10)

    def test_remove_inverse(self):
        assert remove_break([0, 2, 5, 10], 1) == (0, 5, 10)

    def test_add_then_remove_is_identity(self):
        base = (0.0, 5.0, 10.0)
        grown = add_break(base, 3.0)
        assert remove_break(grown, grown.index(3.0)) == base

    def test_set_past_neighbor_rejected(self):
        with pytest.raises(NonMonotoneResult):
            set_break([0, 2, 5, 10], 1, 6)

    def test_cannot_remove_outer(self):
        with pytest.raises(CannotRemoveOuterExtent):
            remove_break([0, 5, 10], 0)
        with pytest.raises(CannotRemoveOuterExtent):
            remove_break([0, 5, 10], 2)

    def test_edit_dispatch(self):
        assert edit_breaks([0, 5, 10], {"op": "add", "value": 7}) == (0, 5, 7, 10)
        assert edit_breaks([0, 5, 10], {"op": "remove", "index": 1}) == (0, 10)
        assert edit_breaks([0, 5, 10], {"op": "set", "index": 1, "value": 6}) == (0, 6, 10)


class TestApplyPins:
    def test_forced_rule_example(self):
        # pin 4.5 into bin 2: L2=4.5, next break 6 -> e2 = 4.5 + (6-4.5)/2
        s = _series([0.5, 2.5, 4.5, 6.5, 8.5, 9.5])
        solved, _ = apply_pins(
            [0, 2, 4, 6, 8, 10], [PinConstraint(target_bin=2, value=4.5)], s
        )
        assert solved == (0, 2, 5.25, 6, 8, 10)
        assignments, _, _ = assign(s, solved)
        assert assignments["f2"] == 2  # 4.5 now sits in bin 2

    def test_order_violation_infeasible(self):
        s = _series([1, 2, 3, 4])
        with pytest.raises(InfeasibleConstraints):
            apply_pins(
                [0, 2.5, 5],
                [PinConstraint(target_bin=1, value=3), PinConstraint(target_bin=2, value=2)],
                s,
            )

    def test_same_value_two_bins_infeasible(self):
        s = _series([1, 2, 3])
        with pytest.raises(InfeasibleConstraints):
            apply_pins(
                [0, 1.5, 3],
                [PinConstraint(target_bin=1, value=2), PinConstraint(target_bin=2, value=2)],
                s,
            )

    def test_scenario_replay_two_low_counties_into_bin_one(self, sample_series):
        # the worked scenario: pin two low-value counties into the lowest bin,
        # verify with assign that both land there and bin 1 grew wide
        base = natural_breaks(sample_series, 6)
        low_ids = ["22035", "13235"]  # values 67.35 and 69.81
        pins = [PinConstraint(target_bin=1, feature_id=fid) for fid in low_ids]
        solved, _notes = apply_pins(base.extents, pins, sample_series)
        assignments, _, _ = assign(sample_series, solved)
        assert all(assignments[fid] == 1 for fid in low_ids)
        assert solved[1] > max(sample_series.value_of(f) for f in low_ids)
        assert solved[1] - solved[0] > base.extents[1] - base.extents[0]

    def test_unknown_feature(self, sample_series):
        with pytest.raises(UnknownFeature):
            apply_pins(
                [60, 70, 85],
                [PinConstraint(target_bin=1, feature_id="99999")],
                sample_series,
            )

    def test_untouched_breaks_stay_put(self):
        s = _series([1, 2, 3, 4, 5, 6, 7, 8, 9])
        base = (0.0, 2.5, 5.0, 7.5, 10.0)
        solved, _ = apply_pins(base, [PinConstraint(target_bin=3, value=6.0)], s)
        # 6.0 already in bin 3: nothing moves
        assert solved == base

    def test_idempotent_on_own_output(self, sample_series):
        base = natural_breaks(sample_series, 6).extents
        pins = [
            PinConstraint(target_bin=1, value=72.9),
            PinConstraint(target_bin=4, value=77.0),
        ]
        once, _ = apply_pins(base, pins, sample_series)
        twice, _ = apply_pins(once, pins, sample_series)
        assert once == twice


def _random_feasible_case(rng):
    """A random series, base extents and a feasible pin set (<= 5 pins).

    Targets come from assigning the pinned values under a random hidden break
    layout, so a satisfying layout exists by construction.
    """
    n = int(rng.integers(10, 60))
    values = np.unique(np.sort(rng.uniform(0, 100, size=n).round(4)))
    s = FeatureSeries([f"f{i}" for i in range(values.size)], values.tolist())
    k = int(rng.integers(2, 7))
    lo, hi = float(values[0]), float(values[-1])
    base = [lo + i * (hi - lo) / k for i in range(k)] + [hi]
    witness = np.sort(rng.uniform(lo, hi, size=k - 1))
    pin_count = int(rng.integers(1, 6))
    picks = rng.choice(values.size, size=min(pin_count, values.size), replace=False)
    pins = [
        PinConstraint(
            target_bin=int(np.searchsorted(witness, values[p], side="right")) + 1,
            value=float(values[p]),
        )
        for p in picks
    ]
    return s, tuple(base), pins


class TestApplyPinsRandomized:
    def test_feasible_sets_are_satisfied(self):
        rng = np.random.default_rng(2024)
        for _ in range(300):
            s, base, pins = _random_feasible_case(rng)
            solved, _ = apply_pins(base, pins, s)
            assignments, _, _ = assign(s, solved)
            for pin in pins:
                fid = next(
                    f for f in s.feature_ids if s.value_of(f) == pin.value
                )
                assert assignments[fid] == pin.target_bin

    def test_order_violations_are_rejected(self):
        rng = np.random.default_rng(99)
        rejected = 0
        for _ in range(100):
            s, base, pins = _random_feasible_case(rng)
            if len(pins) < 2:
                continue
            k = len(base) - 1
            bad = list(pins)
            bad[0] = PinConstraint(target_bin=k, value=bad[0].value)
            if bad[0].value < bad[-1].value and bad[-1].target_bin < k:
                with pytest.raises(InfeasibleConstraints):
                    apply_pins(base, bad, s)
                rejected += 1
        assert rejected > 20


class TestCustomMethodStore:
    def test_save_then_run_round_trip(self, sample_series, tmp_path):
        from binx.methods import run_method
        from binx.methodspec import MethodSpec

        store = CustomMethodStore(tmp_path / "methods.json")
        base = natural_breaks(sample_series, 6)
        store.save("South versus rest of the U.S.: Test 1", base.extents,
                   provenance={"seed_method_id": "natural_breaks", "constraint_log": []})
        rerun = run_method(
            sample_series,
            MethodSpec("custom:South versus rest of the U.S.: Test 1"),
            custom_store=store,
        )
        assert rerun.extents == base.extents
        assert rerun.assignments == base.assignments

    def test_duplicate_name_rejected(self, tmp_path):
        store = CustomMethodStore(tmp_path / "methods.json")
        store.save("a", [0, 1, 2])
        with pytest.raises(DuplicateName):
            store.save("a", [0, 5, 9])

    def test_delete_then_resave(self, tmp_path):
        store = CustomMethodStore(tmp_path / "methods.json")
        store.save("a", [0, 1, 2])
        assert store.delete("a")
        saved = store.save("a", [0, 3, 6])
        assert saved.extents == (0, 3, 6)

    def test_invalid_extents(self, tmp_path):
        store = CustomMethodStore(tmp_path / "methods.json")
        with pytest.raises(InvalidExtents):
            store.save("bad", [5, 5])

    def test_persists_across_instances(self, tmp_path):
        path = tmp_path / "methods.json"
        CustomMethodStore(path).save("kept", [1, 2, 3])
        assert CustomMethodStore(path).get("kept").extents == (1, 2, 3)


def test_misuse_warning_verbatim():
    assert misuse_warning() == (
        "We recommend using this feature only for educational purposes."
    )
