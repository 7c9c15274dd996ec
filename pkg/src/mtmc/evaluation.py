"""Run-log ingestion and criteria computation.

Raw evaluation runs arrive as CSV records of (combination, task, fold, epoch,
accuracy).  Per fold we keep the best accuracy and the earliest epoch that
attains it; per (combination, task) we turn the folds into four criteria:

* mean and sample variance of the classification error (1 - best accuracy),
* mean and sample variance of the convergence epoch.

Sample variance uses the n-1 denominator, which is why every (combination,
task) cell needs at least two folds.  Aggregation across tasks is the
unweighted elementwise mean.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    EmptyInputError,
    InsufficientFoldsError,
    LogParseError,
    MatrixBuildError,
    MTMCError,
)
from .matrix import Combination, EvaluationMatrix

#: Expected run-log CSV header, in order.
RUN_LOG_HEADER = ("combination_id", "task_id", "fold_id", "epoch", "accuracy")

#: Criteria computed by this module, in matrix column order.
CRITERIA_NAMES = ("error_mean", "error_var", "epoch_mean", "epoch_var")


@dataclass(frozen=True)
class RunRecord:
    """One (combination, task, fold, epoch) accuracy measurement."""

    combination_id: str
    task_id: str
    fold_id: str
    epoch: int
    accuracy: float

    def key(self) -> tuple[str, str, str, int]:
        return (self.combination_id, self.task_id, self.fold_id, self.epoch)


@dataclass(frozen=True)
class CombinationSpec:
    """A combination id and its hyperparameter assignment.

    Hyperparameters are an open string map; combinations from different
    schedule families (different name sets) may coexist in one run.
    """

    combination_id: str
    hyperparameters: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class FoldSummary:
    """Best accuracy of one fold and the earliest epoch attaining it."""

    max_accuracy: float
    convergence_epoch: int


def _to_text(source: bytes | str | Path | IO) -> str:
    """Accept bytes, text, a path, or a readable stream; return decoded text."""
    if isinstance(source, Path):
        data: bytes | str = source.read_bytes()
    elif hasattr(source, "read"):
        data = source.read()
    else:
        data = source
    if isinstance(data, (bytes, bytearray)):
        try:
            text = bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            line = bytes(data)[: exc.start].count(b"\n") + 1
            raise LogParseError(f"not valid UTF-8 ({exc.reason})", line=line) from exc
    else:
        text = data
    # Normalize CRLF/CR so line numbering and parsing agree.
    return text.replace("\r\n", "\n").replace("\r", "\n")


def parse_run_log(source: bytes | str | Path | IO) -> list[RunRecord]:
    """Parse and validate a run-log CSV, preserving row order.

    The first line must be exactly ``combination_id,task_id,fold_id,epoch,
    accuracy``.  Every failure names the 1-based line at fault: wrong column
    count, non-numeric or non-positive epoch, accuracy outside [0, 1], empty
    id fields, or a duplicate (combination, task, fold, epoch) tuple.
    """
    lines = _to_text(source).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise LogParseError("missing header", line=1)

    header = next(csv.reader([lines[0]]))
    if tuple(h.strip() for h in header) != RUN_LOG_HEADER:
        raise LogParseError(
            f"header must be {','.join(RUN_LOG_HEADER)!r}, got {lines[0]!r}", line=1
        )

    records: list[RunRecord] = []
    seen: set[tuple[str, str, str, int]] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        if raw == "":
            continue
        row = next(csv.reader([raw]))
        if len(row) != len(RUN_LOG_HEADER):
            raise LogParseError(
                f"expected {len(RUN_LOG_HEADER)} columns, got {len(row)}", line=lineno
            )
        combination_id, task_id, fold_id, epoch_text, accuracy_text = (v.strip() for v in row)
        for name, value in (
            ("combination_id", combination_id),
            ("task_id", task_id),
            ("fold_id", fold_id),
        ):
            if not value:
                raise LogParseError(f"empty {name}", line=lineno)
        try:
            epoch = int(epoch_text)
        except ValueError:
            raise LogParseError(f"epoch {epoch_text!r} is not an integer", line=lineno) from None
        if epoch < 1:
            raise LogParseError(f"epoch must be >= 1, got {epoch}", line=lineno)
        try:
            accuracy = float(accuracy_text)
        except ValueError:
            raise LogParseError(
                f"accuracy {accuracy_text!r} is not a number", line=lineno
            ) from None
        if not 0.0 <= accuracy <= 1.0:
            raise LogParseError(f"accuracy {accuracy} outside [0, 1]", line=lineno)
        record = RunRecord(combination_id, task_id, fold_id, epoch, accuracy)
        if record.key() in seen:
            raise LogParseError(
                f"duplicate (combination, task, fold, epoch) tuple {record.key()!r}",
                line=lineno,
            )
        seen.add(record.key())
        records.append(record)
    return records


def load_run_log(path: str | Path) -> list[RunRecord]:
    return parse_run_log(Path(path))


def load_combination_specs(source: bytes | str | Path | IO) -> list[CombinationSpec]:
    """Load the combination-spec JSON list and validate ids and names."""
    text = _to_text(source)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MTMCError(f"combination specs are not valid JSON: {exc}") from exc
    if not isinstance(payload, list):
        raise MTMCError("combination specs must be a JSON list")
    specs: list[CombinationSpec] = []
    seen: set[str] = set()
    for i, entry in enumerate(payload):
        if not isinstance(entry, dict) or "combination_id" not in entry:
            raise MTMCError(f"spec entry {i} must be an object with a 'combination_id'")
        combination_id = str(entry["combination_id"])
        if not combination_id:
            raise MTMCError(f"spec entry {i} has an empty combination_id")
        if combination_id in seen:
            raise MTMCError(f"duplicate combination_id {combination_id!r} in specs")
        seen.add(combination_id)
        hyperparameters = entry.get("hyperparameters", {})
        if not isinstance(hyperparameters, dict):
            raise MTMCError(f"spec entry {i}: 'hyperparameters' must be an object")
        if any(not str(name) for name in hyperparameters):
            raise MTMCError(f"spec entry {i} has an empty hyperparameter name")
        specs.append(
            CombinationSpec(
                combination_id=combination_id,
                hyperparameters={str(k): str(v) for k, v in hyperparameters.items()},
            )
        )
    return specs


def summarize_fold(epochs: Iterable[tuple[int, float]]) -> FoldSummary:
    """Reduce one fold's (epoch, accuracy) curve to its best point.

    Returns the maximum accuracy and the smallest epoch attaining it.
    """
    points = sorted(epochs)
    if not points:
        raise EmptyInputError("fold has no epochs")
    if len({e for e, _ in points}) != len(points):
        raise MTMCError("fold has duplicate epoch numbers")
    best_epoch, best_accuracy = points[0]
    for epoch, accuracy in points[1:]:
        if accuracy > best_accuracy:
            best_epoch, best_accuracy = epoch, accuracy
    return FoldSummary(max_accuracy=best_accuracy, convergence_epoch=best_epoch)


def compute_task_criteria(folds: Sequence[FoldSummary]) -> tuple[float, float, float, float]:
    """Fold statistics for one (combination, task) cell.

    Returns (error_mean, error_var, epoch_mean, epoch_var) with error =
    1 - max_accuracy and sample variances over the n-1 denominator.
    """
    if len(folds) < 2:
        raise InsufficientFoldsError(
            f"sample variance needs at least 2 folds, got {len(folds)}"
        )
    errors = np.array([1.0 - f.max_accuracy for f in folds])
    epochs = np.array([float(f.convergence_epoch) for f in folds])
    return (
        float(np.mean(errors)),
        float(np.var(errors, ddof=1)),
        float(np.mean(epochs)),
        float(np.var(epochs, ddof=1)),
    )


def build_matrix(
    records: Sequence[RunRecord], specs: Sequence[CombinationSpec]
) -> EvaluationMatrix:
    """Assemble the evaluation matrix from run records and combination specs.

    Grouping is key-based, so record order never matters; combination order
    follows ``specs`` and tasks are sorted.  All structural problems (unknown
    combination ids, ragged task coverage, cells with fewer than two folds)
    are collected and reported together in one :class:`MatrixBuildError`.
    """
    if not records:
        raise EmptyInputError("no run records; cannot build an evaluation matrix")
    seen_spec_ids: set[str] = set()
    for spec in specs:
        if spec.combination_id in seen_spec_ids:
            raise MatrixBuildError([f"duplicate combination_id {spec.combination_id!r} in specs"])
        seen_spec_ids.add(spec.combination_id)

    problems: list[str] = []
    known = {spec.combination_id for spec in specs}
    unknown = sorted({r.combination_id for r in records} - known)
    problems.extend(f"record combination_id {cid!r} not present in specs" for cid in unknown)

    # cells[(cid, tid)][fid] -> list of (epoch, accuracy)
    cells: dict[tuple[str, str], dict[str, list[tuple[int, float]]]] = {}
    for record in records:
        if record.combination_id not in known:
            continue
        fold_curves = cells.setdefault((record.combination_id, record.task_id), {})
        fold_curves.setdefault(record.fold_id, []).append((record.epoch, record.accuracy))

    tasks = tuple(sorted({tid for _, tid in cells}))
    for spec in specs:
        covered = {tid for cid, tid in cells if cid == spec.combination_id}
        missing = sorted(set(tasks) - covered)
        if missing:
            problems.append(
                f"combination {spec.combination_id!r} has no records for task(s) {missing}"
            )

    per_combo: dict[str, dict[str, tuple[float, ...]]] = {}
    for (cid, tid), fold_curves in sorted(cells.items()):
        folds = []
        for fid in sorted(fold_curves):
            try:
                folds.append(summarize_fold(fold_curves[fid]))
            except MTMCError as exc:
                problems.append(f"combination {cid!r}, task {tid!r}, fold {fid!r}: {exc}")
        try:
            criteria = compute_task_criteria(folds)
        except InsufficientFoldsError as exc:
            problems.append(f"combination {cid!r}, task {tid!r}: {exc}")
            continue
        per_combo.setdefault(cid, {})[tid] = criteria

    if problems:
        raise MatrixBuildError(problems)

    combinations = []
    for spec in specs:
        vectors = per_combo[spec.combination_id]
        # Same arithmetic as the matrix invariant check: plain sums over tasks.
        aggregated = tuple(
            sum(vectors[tid][j] for tid in tasks) / len(tasks)
            for j in range(len(CRITERIA_NAMES))
        )
        combinations.append(
            Combination(
                id=spec.combination_id,
                hyperparameters=dict(spec.hyperparameters),
                per_task={tid: vectors[tid] for tid in tasks},
                aggregated=aggregated,
            )
        )
    return EvaluationMatrix(
        criteria_names=CRITERIA_NAMES,
        tasks=tasks,
        combinations=tuple(combinations),
    )
