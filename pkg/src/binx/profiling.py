"""Distribution profile: summary statistics, histogram and a Gaussian KDE."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import BinxError, EmptySeries
from .methods._util import inclusive_quantile
from .series import FeatureSeries

KDE_GRID_POINTS = 512
KDE_PAD_BANDWIDTHS = 4.0


@dataclass(frozen=True)
class Profile:
    """Summary of a series: counts, moments, histogram, kernel density estimate.

    All statistics are over valid values only; ``count`` covers missing
    entries too when they are toggled on.
    """

    count: int
    missing_count: int
    min: float
    max: float
    mean: float
    median: float
    std_dev: float
    skewness: float
    histogram_edges: tuple[float, ...]
    histogram_counts: tuple[int, ...]
    kde_grid: tuple[float, ...]
    kde_density: tuple[float, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "count": self.count,
            "missingCount": self.missing_count,
            "min": self.min,
            "max": self.max,
            "mean": self.mean,
            "median": self.median,
            "stdDev": self.std_dev,
            "skewness": self.skewness,
            "histogram": {
                "edges": list(self.histogram_edges),
                "counts": list(self.histogram_counts),
            },
            "kde": {"grid": list(self.kde_grid), "density": list(self.kde_density)},
        }


def silverman_bandwidth(values: np.ndarray) -> float:
    """Silverman's rule of thumb with a relative floor so the KDE never collapses."""
    n = values.size
    sigma = float(values.std())  # population, consistent with std_deviation binning
    iqr = inclusive_quantile(np.sort(values), 0.75) - inclusive_quantile(
        np.sort(values), 0.25
    )
    spread = min(sigma, iqr / 1.34) if iqr > 0 else sigma
    if spread <= 0:
        spread = max(abs(float(values[0])), 1.0) * 1e-3
    h = 0.9 * spread * n ** (-1 / 5)
    value_range = float(values.max() - values.min())
    return max(h, 1e-9 * value_range, 1e-12)


def profile(
    series: FeatureSeries, histogram_bins: int = 20, toggle_missing: bool = True
) -> Profile:
    """Profile the series distribution.

    ``toggle_missing`` only switches whether the missing entries show up in
    the reported counts; statistics never include them.
    """
    if histogram_bins < 1:
        raise BinxError(f"histogram_bins must be >= 1, got {histogram_bins}")
    values = series.require_valid()
    lo, hi = float(values.min()), float(values.max())
    counts, edges = np.histogram(values, bins=histogram_bins, range=(lo, hi))

    h = silverman_bandwidth(values)
    pad = KDE_PAD_BANDWIDTHS * h
    grid = np.linspace(lo - pad, hi + pad, KDE_GRID_POINTS)
    # mean of Gaussian kernels, evaluated on the grid
    z = (grid[:, None] - values[None, :]) / h
    density = np.exp(-0.5 * z * z).sum(axis=1) / (values.size * h * np.sqrt(2 * np.pi))

    missing = series.missing_count if toggle_missing else 0
    return Profile(
        count=values.size + missing,
        missing_count=missing,
        min=lo,
        max=hi,
        mean=float(values.mean()),
        median=float(np.median(values)),
        std_dev=float(values.std()),
        skewness=_population_skewness(values),
        histogram_edges=tuple(float(e) for e in edges),
        histogram_counts=tuple(int(c) for c in counts),
        kde_grid=tuple(float(g) for g in grid),
        kde_density=tuple(float(d) for d in density),
    )


def _population_skewness(values: np.ndarray) -> float:
    sigma = values.std()
    if sigma == 0:
        return 0.0
    return float((((values - values.mean()) / sigma) ** 3).mean())
