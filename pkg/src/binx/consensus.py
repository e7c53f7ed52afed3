"""Combine-view computations: per-feature bin votes across methods."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import BinCountMismatch, PaletteTooSmall, TooFewMethods
from .methods import majority_vote, run_method
from .methodspec import MethodSpec
from .result import BinningResult
from .series import FeatureSeries


@dataclass(frozen=True)
class ConsensusMatrix:
    """Per-feature bin ids across member methods, plus the majority verdicts.

    Features with missing values are excluded. Ties on the majority vote
    resolve to the lowest bin id.
    """

    feature_ids: tuple[str, ...]
    member_method_ids: tuple[str, ...]
    bin_matrix: dict[str, tuple[int, ...]]
    majority_bin: dict[str, int]
    majority_frequency: dict[str, int]

    @property
    def method_count(self) -> int:
        return len(self.member_method_ids)

    def row(self, feature_id: str) -> tuple[int, ...]:
        return self.bin_matrix[feature_id]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "methods": list(self.member_method_ids),
            "features": {
                fid: {
                    "bins": list(self.bin_matrix[fid]),
                    "majorityBin": self.majority_bin[fid],
                    "majorityFrequency": self.majority_frequency[fid],
                }
                for fid in self.feature_ids
            },
        }


def matrix_from_results(
    series: FeatureSeries,
    member_results: Sequence[tuple[str, BinningResult]],
    expected_k: int,
) -> ConsensusMatrix:
    for method_id, result in member_results:
        if result.bin_count != expected_k:
            raise BinCountMismatch(
                f"{method_id} produced {result.bin_count} bins, expected {expected_k}",
                method_id=method_id,
                actual_k=result.bin_count,
            )
    valid_ids = tuple(
        fid
        for i, fid in enumerate(series.feature_ids)
        if not series.missing_mask[i]
    )
    bin_matrix: dict[str, tuple[int, ...]] = {}
    majority_bin: dict[str, int] = {}
    majority_frequency: dict[str, int] = {}
    for fid in valid_ids:
        row = tuple(result.assignments[fid] for _, result in member_results)
        bin_matrix[fid] = row
        winner, freq = majority_vote(row)
        majority_bin[fid] = winner
        majority_frequency[fid] = freq
    return ConsensusMatrix(
        feature_ids=valid_ids,
        member_method_ids=tuple(mid for mid, _ in member_results),
        bin_matrix=bin_matrix,
        majority_bin=majority_bin,
        majority_frequency=majority_frequency,
    )


def build_matrix(
    series: FeatureSeries,
    member_specs: Sequence[MethodSpec],
    k: int,
    custom_store: Any = None,
) -> ConsensusMatrix:
    """Run every member method and collect each feature's bin id per method."""
    if len(member_specs) < 2:
        raise TooFewMethods(f"combine needs >= 2 member methods, got {len(member_specs)}")
    results = [
        (spec.method_id, run_method(series, spec, custom_store))
        for spec in member_specs
    ]
    return matrix_from_results(series, results, k)


def combine(
    series: FeatureSeries,
    member_ids: Sequence[str],
    k: int,
    custom_store: Any = None,
) -> tuple[ConsensusMatrix, BinningResult]:
    """The combine view in one call: consensus matrix plus the resiliency result.

    Members run once and feed both outputs.
    """
    from .methods.other import resiliency_from_members

    if len(member_ids) < 2:
        raise TooFewMethods(f"combine needs >= 2 member methods, got {len(member_ids)}")
    results = [
        (mid, run_method(series, MethodSpec(mid, bin_count=k), custom_store))
        for mid in member_ids
    ]
    matrix = matrix_from_results(series, results, k)
    spec = MethodSpec("resiliency", bin_count=k, member_methods=tuple(member_ids))
    resiliency = resiliency_from_members(series, results, k, spec)
    return matrix, resiliency


def majority(matrix: ConsensusMatrix) -> tuple[dict[str, int], dict[str, int]]:
    """(majority bin per feature, its frequency per feature)."""
    return dict(matrix.majority_bin), dict(matrix.majority_frequency)


def value_by_alpha(
    matrix: ConsensusMatrix, palette_colors: Sequence[str], k: int
) -> dict[str, tuple[str, float]]:
    """Hue from the majority bin, opacity from how strong the majority is."""
    if len(palette_colors) < k:
        raise PaletteTooSmall(
            f"palette offers {len(palette_colors)} colors, combine needs {k}"
        )
    out: dict[str, tuple[str, float]] = {}
    for fid in matrix.feature_ids:
        color = palette_colors[matrix.majority_bin[fid] - 1]
        alpha = matrix.majority_frequency[fid] / matrix.method_count
        out[fid] = (color, alpha)
    return out
