from __future__ import annotations

import numpy as np
import pytest

from binx.dataio import load_sample
from binx.series import FeatureSeries


@pytest.fixture(scope="session")
def sample_dataset():
    return load_sample()


@pytest.fixture(scope="session")
def sample_series(sample_dataset):
    return sample_dataset.series


@pytest.fixture()
def series_factory():
    def make(values, ids=None, name="value"):
        if ids is None:
            ids = [f"f{i:04d}" for i in range(len(values))]
        return FeatureSeries(ids, values, attribute_name=name)

    return make


@pytest.fixture(scope="session")
def pareto_series():
    # deterministic Pareto(alpha=1.16) sample via inverse-CDF over a regular grid
    n = 1000
    u = (np.arange(n) + 0.5) / n
    values = (1.0 - u) ** (-1.0 / 1.16)
    return FeatureSeries(
        [f"p{i:04d}" for i in range(n)], values.tolist(), attribute_name="pareto"
    )


_ACCEPTANCE_LINES: list[str] = []


def acceptance_line(number: int, description: str) -> None:
    """Record one pass line per acceptance criterion for the terminal summary."""
    _ACCEPTANCE_LINES.append(f"ACCEPTANCE {number:02d} PASS: {description}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
