from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

# Make the sibling oracles module importable regardless of invocation dir.
sys.path.insert(0, str(Path(__file__).parent))

from mtmc.matrix import EvaluationMatrix


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one PASS/FAIL line per acceptance criterion."""
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and "test_acceptance" in item.nodeid:
        terminal = item.config.pluginmanager.getplugin("terminalreporter")
        if terminal is not None:
            status = "PASS" if report.passed else "FAIL"
            terminal.write_line(f"[acceptance] {status}: {item.name}")


def random_rows(rng: np.random.Generator, n: int, k: int) -> list[tuple[float, ...]]:
    """Random criteria rows; half the time quantized so ties and duplicates occur."""
    if rng.random() < 0.5:
        values = rng.integers(0, 4, size=(n, k)).astype(float)
    else:
        values = rng.normal(size=(n, k))
    return [tuple(float(v) for v in row) for row in values]


def random_matrix(rng: np.random.Generator, n: int, k: int) -> EvaluationMatrix:
    return EvaluationMatrix.from_aggregated(random_rows(rng, n, k))


def random_weights(rng: np.random.Generator, k: int) -> list[float]:
    """A valid significance vector, bounded away from all-zero."""
    w = rng.uniform(0.0, 1.0, size=k)
    w[int(rng.integers(0, k))] = rng.uniform(0.1, 1.0)
    return [float(v) for v in w]
