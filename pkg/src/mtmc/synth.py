"""Deterministic synthetic run-log generator.

Produces combination specs on a grid over two learning-rate knobs plus a
three-valued schedule mode, and one accuracy record per (combination, task,
fold, epoch).  Accuracy follows a saturating curve

    ceiling * (1 - exp(-epoch / tau)) + task_offset + noise

clamped to [0, 1], where, with u = log10(base_lr) and v = log10(max_lr):

* ``ceiling = clip(0.90 - 0.06 (u + 2.5)^2 - 0.04 (v + 2.0)^2, 0.30, 0.97)``
  (a smooth bump: mid-grid learning rates reach the highest accuracy);
* ``tau = 2.0 + 1.2 * mode_index + 0.8 * (v + 4.0)`` epochs, so schedule
  mode and max_lr control convergence speed;
* ``task_offset`` spreads tasks linearly over +/-0.015 (tasks differ in
  difficulty);
* noise is Gaussian with standard deviation ``noise_sd``, drawn from a
  PCG64 stream seeded with (seed, combination, task, fold), so every fold
  has its own fixed stream and generation order cannot matter.

With ``noise_sd = 0`` the curve is strictly increasing in epoch and stays
strictly inside (0, 1), so the clamp never binds and every fold converges at
the last epoch.  The model exists to exercise the pipeline at realistic
scale, not to imitate any particular training run.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from io import StringIO
from pathlib import Path
from typing import IO, Sequence

import numpy as np

from .errors import ConfigError
from .evaluation import RUN_LOG_HEADER, CombinationSpec, RunRecord

#: Schedule modes for the categorical knob, in grid order.
CYCLIC_MODES = ("triangular", "triangular2", "exp_range")

_BASE_LR_RANGE = (1e-4, 5e-2)
_MAX_LR_RANGE = (1e-4, 1e-2)


@dataclass(frozen=True)
class SynthConfig:
    """Scale and randomness knobs for one synthetic run.

    Defaults produce 100 combinations x 5 tasks x 10 folds x 15 epochs =
    75000 records.
    """

    n_combinations: int = 100
    n_folds: int = 10
    n_epochs: int = 15
    n_tasks: int = 5
    seed: int = 0
    noise_sd: float = 0.02

    def __post_init__(self):
        for name in ("n_combinations", "n_folds", "n_epochs", "n_tasks"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.n_folds < 2:
            raise ConfigError(
                f"n_folds must be >= 2 (sample variance needs two folds), got {self.n_folds}"
            )
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if not self.noise_sd >= 0.0:
            raise ConfigError(f"noise_sd must be non-negative, got {self.noise_sd!r}")

    @property
    def n_records(self) -> int:
        return self.n_combinations * self.n_tasks * self.n_folds * self.n_epochs


def _grid(config: SynthConfig) -> list[tuple[float, float, str]]:
    """The (base_lr, max_lr, cyclic_mode) assignment for each combination.

    The numeric knobs are log-spaced over fixed ranges; the grid is sized to
    the smallest base x max x mode lattice covering n_combinations and then
    truncated, enumerated with base_lr slowest and mode fastest.
    """
    n = config.n_combinations
    numeric_cells = math.ceil(n / len(CYCLIC_MODES))
    n_base = max(1, math.ceil(math.sqrt(numeric_cells)))
    n_max = max(1, math.ceil(numeric_cells / n_base))
    base_values = np.geomspace(*_BASE_LR_RANGE, n_base)
    max_values = np.geomspace(*_MAX_LR_RANGE, n_max)
    assignments = []
    for i in range(n):
        mode = CYCLIC_MODES[i % len(CYCLIC_MODES)]
        cell = i // len(CYCLIC_MODES)
        base_lr = float(base_values[cell // n_max])
        max_lr = float(max_values[cell % n_max])
        assignments.append((base_lr, max_lr, mode))
    return assignments


def _ceiling(base_lr: float, max_lr: float) -> float:
    u = math.log10(base_lr)
    v = math.log10(max_lr)
    return float(np.clip(0.90 - 0.06 * (u + 2.5) ** 2 - 0.04 * (v + 2.0) ** 2, 0.30, 0.97))


def _tau(max_lr: float, mode: str) -> float:
    return 2.0 + 1.2 * CYCLIC_MODES.index(mode) + 0.8 * (math.log10(max_lr) + 4.0)


def _task_offset(task_index: int, n_tasks: int) -> float:
    if n_tasks == 1:
        return 0.0
    return 0.03 * (task_index / (n_tasks - 1) - 0.5)


def generate(config: SynthConfig) -> tuple[list[CombinationSpec], list[RunRecord]]:
    """Generate combination specs and run records for the given config.

    Output is canonically ordered (combination, task, fold, epoch) and
    bit-identical for equal configs.
    """
    width_c = max(3, len(str(config.n_combinations - 1)))
    width_t = max(1, len(str(config.n_tasks - 1)))
    width_f = max(2, len(str(config.n_folds - 1)))

    specs = []
    assignments = _grid(config)
    for i, (base_lr, max_lr, mode) in enumerate(assignments):
        specs.append(
            CombinationSpec(
                combination_id=f"c{i:0{width_c}d}",
                hyperparameters={
                    "base_lr": format(base_lr, ".6g"),
                    "max_lr": format(max_lr, ".6g"),
                    "cyclic_mode": mode,
                },
            )
        )

    epochs = np.arange(1, config.n_epochs + 1, dtype=float)
    records: list[RunRecord] = []
    for ci, (base_lr, max_lr, mode) in enumerate(assignments):
        ceiling = _ceiling(base_lr, max_lr)
        tau = _tau(max_lr, mode)
        curve = ceiling * (1.0 - np.exp(-epochs / tau))
        for ti in range(config.n_tasks):
            offset = _task_offset(ti, config.n_tasks)
            for fi in range(config.n_folds):
                rng = np.random.default_rng((config.seed, ci, ti, fi))
                noise = rng.normal(0.0, config.noise_sd, config.n_epochs)
                accuracy = np.clip(curve + offset + noise, 0.0, 1.0)
                records.extend(
                    RunRecord(
                        combination_id=f"c{ci:0{width_c}d}",
                        task_id=f"t{ti:0{width_t}d}",
                        fold_id=f"f{fi:0{width_f}d}",
                        epoch=int(e),
                        accuracy=float(a),
                    )
                    for e, a in zip(epochs, accuracy)
                )
    return specs, records


def format_run_log(records: Sequence[RunRecord]) -> str:
    """Render records as run-log CSV text (LF line endings, repr floats)."""
    out = StringIO()
    out.write(",".join(RUN_LOG_HEADER) + "\n")
    for r in records:
        out.write(f"{r.combination_id},{r.task_id},{r.fold_id},{r.epoch},{r.accuracy!r}\n")
    return out.getvalue()


def write_run_log(records: Sequence[RunRecord], destination: str | Path | IO) -> None:
    text = format_run_log(records)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")


def format_combination_specs(specs: Sequence[CombinationSpec]) -> str:
    payload = [
        {"combination_id": s.combination_id, "hyperparameters": dict(s.hyperparameters)}
        for s in specs
    ]
    return json.dumps(payload, indent=2) + "\n"


def write_combination_specs(specs: Sequence[CombinationSpec], destination: str | Path | IO) -> None:
    text = format_combination_specs(specs)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")
