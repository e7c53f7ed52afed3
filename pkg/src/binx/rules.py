"""Classification lint: the classic five-rule checklist applied to a result.

Checks cover range coverage, extent monotonicity, vacant bins, grossly
unbalanced bin sizes, and a reminder that manually placed breaks carry no
mathematical relationship to the data. Violations are reports, not errors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MismatchedInputs
from .result import BinningResult
from .series import FeatureSeries

DEFAULT_BALANCE_RATIO = 10.0


@dataclass(frozen=True)
class RuleViolation:
    rule: str
    severity: str  # "warning" | "info"
    message: str
    bin_index: int | None = None

    def to_json_dict(self) -> dict:
        out = {"rule": self.rule, "severity": self.severity, "message": self.message}
        if self.bin_index is not None:
            out["binIndex"] = self.bin_index
        return out


def validate_rules(
    result: BinningResult,
    series: FeatureSeries,
    balance_ratio: float = DEFAULT_BALANCE_RATIO,
) -> list[RuleViolation]:
    """All rule violations for a result over the series it was computed from."""
    if set(result.assignments) != set(series.feature_ids):
        raise MismatchedInputs("result assignments do not cover the series features")
    violations: list[RuleViolation] = []
    ext = result.extents

    overlapping = any(ext[i] >= ext[i + 1] for i in range(len(ext) - 1))
    if overlapping:
        violations.append(
            RuleViolation(
                "OverlappingExtents",
                "warning",
                f"extents are not strictly increasing: {list(ext)}",
            )
        )

    lo, hi = series.data_min(), series.data_max()
    if lo < ext[0] or hi > ext[-1]:
        violations.append(
            RuleViolation(
                "RangeNotCovered",
                "warning",
                f"data range [{lo!r}, {hi!r}] exceeds extents [{ext[0]!r}, {ext[-1]!r}]",
            )
        )

    for j, size in enumerate(result.bin_sizes, start=1):
        if size == 0:
            violations.append(
                RuleViolation(
                    "VacantBin", "warning", f"bin {j} holds no features", bin_index=j
                )
            )

    nonempty = [s for s in result.bin_sizes if s > 0]
    if len(nonempty) >= 2 and max(nonempty) / min(nonempty) > balance_ratio:
        violations.append(
            RuleViolation(
                "UnbalancedBins",
                "warning",
                f"largest bin holds {max(nonempty)} features, smallest {min(nonempty)} "
                f"(ratio above {balance_ratio})",
            )
        )

    if result.method.method_id == "manual_interval" or result.method.is_custom:
        violations.append(
            RuleViolation(
                "ArbitraryBreaks",
                "info",
                "breaks are manually placed and carry no mathematical relationship "
                "to the data",
            )
        )
    return violations
