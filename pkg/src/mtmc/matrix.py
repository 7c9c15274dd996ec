"""The evaluation matrix: combinations x criteria, with per-task detail.

A matrix row is one hyperparameter combination; its ``aggregated`` vector is
the unweighted arithmetic mean of its per-task criteria vectors and is what
the decision mathematics in :mod:`mtmc.core` operates on.  All criteria are
oriented lower-is-better.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import MatrixFormatError

#: Relative/absolute tolerance for the "aggregated == mean of per-task rows" invariant.
AGGREGATION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Combination:
    """One fully specified hyperparameter assignment and its measured criteria."""

    id: str
    hyperparameters: Mapping[str, str] = field(default_factory=dict)
    per_task: Mapping[str, tuple[float, ...]] = field(default_factory=dict)
    aggregated: tuple[float, ...] = ()


@dataclass(frozen=True)
class EvaluationMatrix:
    """Validated container for combinations and their criteria vectors.

    Invariants enforced at construction:

    * combination ids are unique and non-empty;
    * every criteria vector (per-task and aggregated) has ``len(criteria_names)``
      finite entries;
    * every combination covers exactly the declared task set;
    * ``aggregated`` equals the elementwise mean of the per-task vectors to
      within :data:`AGGREGATION_TOLERANCE` (checked only when tasks exist).
    """

    criteria_names: tuple[str, ...]
    tasks: tuple[str, ...]
    combinations: tuple[Combination, ...]

    def __post_init__(self):
        if not self.criteria_names:
            raise MatrixFormatError("matrix must declare at least one criterion")
        if len(set(self.criteria_names)) != len(self.criteria_names):
            raise MatrixFormatError("criteria names must be unique")
        if len(set(self.tasks)) != len(self.tasks):
            raise MatrixFormatError("task ids must be unique")
        n = len(self.criteria_names)
        task_set = set(self.tasks)
        seen_ids: set[str] = set()
        for combo in self.combinations:
            if not combo.id:
                raise MatrixFormatError("combination id must be non-empty")
            if combo.id in seen_ids:
                raise MatrixFormatError(f"duplicate combination id {combo.id!r}")
            seen_ids.add(combo.id)
            self._check_vector(combo.aggregated, n, f"combination {combo.id!r} aggregated")
            if set(combo.per_task) != task_set:
                raise MatrixFormatError(
                    f"combination {combo.id!r} covers tasks {sorted(combo.per_task)}, "
                    f"expected {sorted(task_set)}"
                )
            for task, vector in combo.per_task.items():
                self._check_vector(vector, n, f"combination {combo.id!r} task {task!r}")
            if self.tasks:
                mean = [
                    sum(combo.per_task[t][j] for t in self.tasks) / len(self.tasks)
                    for j in range(n)
                ]
                for j, (got, want) in enumerate(zip(combo.aggregated, mean)):
                    if not math.isclose(
                        got, want, rel_tol=AGGREGATION_TOLERANCE, abs_tol=AGGREGATION_TOLERANCE
                    ):
                        raise MatrixFormatError(
                            f"combination {combo.id!r} aggregated[{j}] = {got!r} is not the "
                            f"mean of its per-task values ({want!r})"
                        )

    @staticmethod
    def _check_vector(vector: Sequence[float], n: int, what: str) -> None:
        if len(vector) != n:
            raise MatrixFormatError(f"{what} has {len(vector)} value(s), expected {n}")
        for value in vector:
            if not math.isfinite(value):
                raise MatrixFormatError(f"{what} contains non-finite value {value!r}")

    # -- shape ------------------------------------------------------------

    @property
    def n_criteria(self) -> int:
        return len(self.criteria_names)

    @property
    def n_combinations(self) -> int:
        return len(self.combinations)

    @property
    def n_tasks(self) -> int:
        return len(self.tasks)

    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.combinations)

    def aggregated_rows(self) -> np.ndarray:
        """All aggregated vectors as an (n_combinations, n_criteria) array."""
        return np.array([c.aggregated for c in self.combinations], dtype=float).reshape(
            self.n_combinations, self.n_criteria
        )

    def hyperparameter_names(self) -> tuple[str, ...]:
        """Sorted union of hyperparameter names across all combinations."""
        names: set[str] = set()
        for combo in self.combinations:
            names.update(combo.hyperparameters)
        return tuple(sorted(names))

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_aggregated(
        cls,
        rows: Iterable[Sequence[float]],
        criteria_names: Sequence[str] | None = None,
        ids: Sequence[str] | None = None,
        hyperparameters: Sequence[Mapping[str, str]] | None = None,
        task: str = "t0",
    ) -> "EvaluationMatrix":
        """Build a matrix from aggregated criteria rows alone.

        Each row becomes one combination whose single pseudo-task carries the
        aggregated vector itself, so the mean invariant holds trivially.
        Useful when only the combination-level criteria are available.
        """
        tuples = [tuple(float(v) for v in row) for row in rows]
        if criteria_names is None:
            width = len(tuples[0]) if tuples else 0
            criteria_names = tuple(f"criterion_{j}" for j in range(width))
        if ids is None:
            ids = tuple(f"c{i}" for i in range(len(tuples)))
        if hyperparameters is None:
            hyperparameters = tuple({} for _ in tuples)
        combos = tuple(
            Combination(
                id=str(cid),
                hyperparameters=dict(hp),
                per_task={task: row},
                aggregated=row,
            )
            for cid, hp, row in zip(ids, hyperparameters, tuples, strict=True)
        )
        return cls(criteria_names=tuple(criteria_names), tasks=(task,), combinations=combos)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "criteria_names": list(self.criteria_names),
            "tasks": list(self.tasks),
            "combinations": [
                {
                    "id": c.id,
                    "hyperparameters": dict(c.hyperparameters),
                    "per_task": {t: list(c.per_task[t]) for t in self.tasks},
                    "aggregated": list(c.aggregated),
                }
                for c in self.combinations
            ],
        }

    def to_json(self) -> str:
        # json uses repr-based float formatting: shortest round-trip decimals.
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, payload: object) -> "EvaluationMatrix":
        if not isinstance(payload, dict):
            raise MatrixFormatError("matrix document must be a JSON object")
        try:
            names = tuple(str(n) for n in payload["criteria_names"])
            tasks = tuple(str(t) for t in payload["tasks"])
            raw_combos = payload["combinations"]
        except KeyError as exc:
            raise MatrixFormatError(f"matrix document is missing key {exc}") from exc
        if not isinstance(raw_combos, list):
            raise MatrixFormatError("'combinations' must be a list")
        combos = []
        for entry in raw_combos:
            if not isinstance(entry, dict):
                raise MatrixFormatError("each combination must be a JSON object")
            try:
                combos.append(
                    Combination(
                        id=str(entry["id"]),
                        hyperparameters={
                            str(k): str(v) for k, v in entry.get("hyperparameters", {}).items()
                        },
                        per_task={
                            str(t): tuple(float(v) for v in vec)
                            for t, vec in entry.get("per_task", {}).items()
                        },
                        aggregated=tuple(float(v) for v in entry["aggregated"]),
                    )
                )
            except KeyError as exc:
                raise MatrixFormatError(f"combination entry is missing key {exc}") from exc
            except (TypeError, ValueError) as exc:
                raise MatrixFormatError(f"combination entry has a non-numeric value: {exc}") from exc
        return cls(criteria_names=names, tasks=tasks, combinations=tuple(combos))

    @classmethod
    def from_json(cls, text: str | bytes) -> "EvaluationMatrix":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"matrix document is not valid JSON: {exc}") from exc
        return cls.from_dict(payload)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "EvaluationMatrix":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise MatrixFormatError(f"cannot read matrix file {path}: {exc}") from exc
        return cls.from_json(text)
