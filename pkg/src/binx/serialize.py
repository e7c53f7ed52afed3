"""Canonical JSON payloads and encoding shared by the CLI and the HTTP service.

Both front ends serialize through this module, so a CLI output file and the
service response body for the same logical request are byte-identical. Floats
round-trip exactly (shortest-repr decimal text).
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .consensus import ConsensusMatrix
from .profiling import Profile
from .result import BinningResult
from .rules import RuleViolation

SCHEMA_VERSION = 1


def dumps_bytes(payload: Any) -> bytes:
    return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def result_payload(result: BinningResult) -> dict[str, Any]:
    out: dict[str, Any] = {
        "method": result.method.to_json_dict(),
        "extents": list(result.extents),
        "binSizes": list(result.bin_sizes),
        "assignments": dict(result.assignments),
        "notes": list(result.notes),
    }
    if result.unclassed_positions is not None:
        out["unclassedPositions"] = dict(result.unclassed_positions)
    return out


def profile_payload(profile: Profile) -> dict[str, Any]:
    return profile.to_json_dict()


def matrix_payload(matrix: ConsensusMatrix) -> dict[str, Any]:
    return matrix.to_json_dict()


def combine_payload(matrix: ConsensusMatrix, resiliency: BinningResult) -> dict[str, Any]:
    return {
        "matrix": matrix_payload(matrix),
        "resiliency": result_payload(resiliency),
    }


def compare_payload(results: Sequence[BinningResult]) -> dict[str, Any]:
    """Per method: bin count plus each bin's extent, interval and size."""
    rows = []
    for result in results:
        bins = []
        for j in range(result.bin_count):
            lo, hi = result.extents[j], result.extents[j + 1]
            bins.append(
                {
                    "extent": [lo, hi],
                    "interval": hi - lo,
                    "size": result.bin_sizes[j],
                }
            )
        rows.append(
            {
                "methodId": result.method.method_id,
                "binCount": result.bin_count,
                "bins": bins,
            }
        )
    return {"methods": rows}


def compare_csv(results: Sequence[BinningResult]) -> str:
    lines = ["methodId,bin,extentLow,extentHigh,interval,size"]
    for result in results:
        for j in range(result.bin_count):
            lo, hi = result.extents[j], result.extents[j + 1]
            lines.append(
                f"{result.method.method_id},{j + 1},{lo!r},{hi!r},{hi - lo!r},"
                f"{result.bin_sizes[j]}"
            )
    return "\n".join(lines) + "\n"


def paint_payload(
    extents: Sequence[float], warning: str, notes: Sequence[str]
) -> dict[str, Any]:
    return {"extents": list(extents), "warning": warning, "notes": list(notes)}


def violations_payload(violations: Sequence[RuleViolation]) -> list[dict[str, Any]]:
    return [v.to_json_dict() for v in violations]
