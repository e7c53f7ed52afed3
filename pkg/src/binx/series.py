"""The joined (region id, numeric value) attribute vector all methods consume."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import BinxError, EmptySeries


class FeatureSeries:
    """An ordered set of (feature_id, value) pairs with an explicit missing mask.

    Missing entries (NaN/null in the source data) are kept in place so that
    downstream consumers can render them with a dedicated noData color, but
    they never participate in statistics or bin assignment.
    """

    def __init__(
        self,
        feature_ids: Sequence[str],
        values: Iterable[float | None],
        attribute_name: str = "value",
        units: str | None = None,
    ) -> None:
        ids = [str(f) for f in feature_ids]
        if len(set(ids)) != len(ids):
            dupes = sorted({f for f in ids if ids.count(f) > 1})
            raise BinxError(f"duplicate feature ids: {dupes[:5]}")
        raw = list(values)
        if len(raw) != len(ids):
            raise BinxError(
                f"feature_ids and values length mismatch: {len(ids)} != {len(raw)}"
            )
        vals = np.full(len(raw), np.nan, dtype=float)
        for i, v in enumerate(raw):
            if v is None:
                continue
            fv = float(v)
            if math.isnan(fv):
                continue
            if math.isinf(fv):
                raise BinxError(f"non-finite value at position {i}: {v!r}")
            vals[i] = fv
        self.feature_ids: tuple[str, ...] = tuple(ids)
        self.values: np.ndarray = vals
        self.values.flags.writeable = False
        self.missing_mask: np.ndarray = np.isnan(vals)
        self.missing_mask.flags.writeable = False
        self.attribute_name = attribute_name
        self.units = units

    def __len__(self) -> int:
        return len(self.feature_ids)

    def __repr__(self) -> str:
        return (
            f"FeatureSeries({self.attribute_name!r}, n={len(self)}, "
            f"valid={self.valid_count})"
        )

    @property
    def valid_count(self) -> int:
        return int((~self.missing_mask).sum())

    @property
    def missing_count(self) -> int:
        return int(self.missing_mask.sum())

    @property
    def valid_values(self) -> np.ndarray:
        """Non-missing values in feature order (read-only view copy)."""
        return self.values[~self.missing_mask]

    def sorted_valid(self) -> np.ndarray:
        return np.sort(self.valid_values)

    def require_valid(self) -> np.ndarray:
        """Valid values, raising EmptySeries when there are none."""
        out = self.valid_values
        if out.size == 0:
            raise EmptySeries("series has no valid values")
        return out

    def value_of(self, feature_id: str) -> float | None:
        try:
            i = self.feature_ids.index(feature_id)
        except ValueError:
            return None
        if self.missing_mask[i]:
            return None
        return float(self.values[i])

    def data_min(self) -> float:
        return float(self.require_valid().min())

    def data_max(self) -> float:
        return float(self.require_valid().max())

    def is_degenerate(self) -> bool:
        """True when every valid value is identical (zero spread)."""
        v = self.require_valid()
        return bool(v.min() == v.max())

    def permuted(self, order: Sequence[int]) -> "FeatureSeries":
        """A new series with (id, value) pairs reordered; used by tests."""
        ids = [self.feature_ids[i] for i in order]
        vals = [None if self.missing_mask[i] else float(self.values[i]) for i in order]
        return FeatureSeries(ids, vals, self.attribute_name, self.units)
