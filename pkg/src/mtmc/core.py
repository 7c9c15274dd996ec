"""Decision mathematics: dominance, Pareto front, scaling, projection, selection.

All operations are pure functions over immutable values and minimize every
criterion.  The selection pipeline is::

    resolve_weights -> pareto_front (-> scale_front) -> project -> argmin

Comparisons for dominance are exact floating-point comparisons; there is no
epsilon, so duplicate criteria vectors never dominate each other and are all
retained on the front.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, EmptyInputError, MTMCError
from .matrix import EvaluationMatrix
from .validation import check_criteria_rows, check_finite_vector, check_weights

logger = logging.getLogger(__name__)

#: Fallback significance weight used when every requested component is zero.
MIDPOINT_WEIGHT = 0.5


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """Return True iff ``a`` Pareto-dominates ``b`` under minimization.

    ``a`` dominates ``b`` when a <= b in every criterion and a < b in at
    least one.  Identical vectors therefore never dominate each other.
    """
    va = check_finite_vector(a, name="first vector")
    vb = check_finite_vector(b, name="second vector")
    if va.shape[0] != vb.shape[0]:
        raise DimensionMismatchError(
            f"cannot compare vectors of length {va.shape[0]} and {vb.shape[0]}"
        )
    return bool(np.all(va <= vb) and np.any(va < vb))


def non_dominated_indices(rows: np.ndarray) -> list[int]:
    """Indices (ascending) of rows not dominated by any other row.

    O(n^2) pairwise check, vectorized one candidate at a time; fine for the
    matrix sizes this package targets (hundreds of combinations).
    """
    members: list[int] = []
    for i in range(rows.shape[0]):
        others_le = np.all(rows <= rows[i], axis=1)
        others_lt = np.any(rows < rows[i], axis=1)
        if not np.any(others_le & others_lt):
            members.append(i)
    return members


def scale_front(front_raw: Sequence[Sequence[float]]) -> tuple[tuple[float, ...], ...]:
    """Min-max scale front rows per criterion onto [0, 1].

    A criterion whose minimum equals its maximum over the front does not
    discriminate between members; its whole scaled column is defined as 0 so
    it contributes nothing to the projection.
    """
    rows = check_criteria_rows(front_raw, name="front rows")
    lo = rows.min(axis=0)
    hi = rows.max(axis=0)
    span = hi - lo
    degenerate = span == 0.0
    span = np.where(degenerate, 1.0, span)
    scaled = (rows - lo) / span
    scaled[:, degenerate] = 0.0
    return tuple(tuple(float(v) for v in row) for row in scaled)


@dataclass(frozen=True)
class ParetoFront:
    """Non-dominated combinations: matrix indices plus raw and scaled criteria."""

    member_indices: tuple[int, ...]
    raw: tuple[tuple[float, ...], ...]
    scaled: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if not self.member_indices:
            raise EmptyInputError("a Pareto front must have at least one member")
        if not (len(self.member_indices) == len(self.raw) == len(self.scaled)):
            raise DimensionMismatchError("front indices, raw and scaled rows must align")
        if any(b <= a for a, b in zip(self.member_indices, self.member_indices[1:])):
            raise MTMCError("front member indices must be strictly increasing")
        for row in self.scaled:
            for value in row:
                if not 0.0 <= value <= 1.0:
                    raise MTMCError(f"scaled value {value!r} outside [0, 1]")

    @property
    def size(self) -> int:
        return len(self.member_indices)


def pareto_front(matrix: EvaluationMatrix) -> ParetoFront:
    """Extract the non-dominated set of the matrix's aggregated vectors.

    Duplicates of a non-dominated vector are all retained; member indices are
    ascending matrix indices.
    """
    if matrix.n_combinations == 0:
        raise EmptyInputError("evaluation matrix has no combinations")
    rows = matrix.aggregated_rows()
    members = non_dominated_indices(rows)
    raw = tuple(tuple(float(v) for v in rows[i]) for i in members)
    return ParetoFront(
        member_indices=tuple(members),
        raw=raw,
        scaled=scale_front(raw),
    )


def resolve_weights(weights: Sequence[float], n_criteria: int) -> tuple[float, ...]:
    """Validate a significance vector, substituting the midpoint when all-zero.

    Components must lie in [0, 1] and the length must equal ``n_criteria``.
    An all-zero vector expresses no preference; it is replaced by
    (0.5, ..., 0.5), logged as a notice rather than treated as an error.
    """
    arr = check_weights(weights, n_criteria, name="significance weights")
    if np.all(arr == 0.0):
        logger.info(
            "all-zero significance weights; substituting midpoint vector (%s components of %s)",
            n_criteria,
            MIDPOINT_WEIGHT,
        )
        return (MIDPOINT_WEIGHT,) * n_criteria
    return tuple(float(v) for v in arr)


def project(
    scaled: Sequence[Sequence[float]], weights: Sequence[float]
) -> tuple[float, ...]:
    """Project rows onto the significance vector: dot(row, w) / ||w||_2.

    ``weights`` must already be resolved (nonzero somewhere); rows only need
    to be finite and of matching width.
    """
    rows = check_criteria_rows(scaled, name="scaled rows")
    w = check_weights(weights, rows.shape[1], name="significance weights")
    norm = float(np.linalg.norm(w))
    if norm == 0.0:
        raise MTMCError("significance weights have zero norm; resolve_weights was skipped")
    return tuple(float(v) for v in rows @ w / norm)


@dataclass(frozen=True)
class SelectionResult:
    """The chosen combination plus the evidence that chose it."""

    selected_index: int
    selected_id: str
    hyperparameters: dict[str, str]
    projections: tuple[float, ...]
    resolved_weights: tuple[float, ...]
    front: ParetoFront

    def __post_init__(self):
        if self.selected_index not in self.front.member_indices:
            raise MTMCError("selected index must be a front member")
        pos = self.front.member_indices.index(self.selected_index)
        if self.projections[pos] != min(self.projections):
            raise MTMCError("selected member's projection must be minimal")


def select_with_front(
    matrix: EvaluationMatrix, front: ParetoFront, weights: Sequence[float]
) -> SelectionResult:
    """Like :func:`select`, but reuses an already computed front.

    The front does not depend on the weights, so long-lived callers (the
    HTTP service) extract it once and answer each query with a projection
    and an argmin.
    """
    resolved = resolve_weights(weights, matrix.n_criteria)
    projections = project(front.scaled, resolved)
    pos = int(np.argmin(projections))
    index = front.member_indices[pos]
    combo = matrix.combinations[index]
    return SelectionResult(
        selected_index=index,
        selected_id=combo.id,
        hyperparameters=dict(combo.hyperparameters),
        projections=projections,
        resolved_weights=resolved,
        front=front,
    )


def select(matrix: EvaluationMatrix, weights: Sequence[float]) -> SelectionResult:
    """Pick the front member whose projection onto the weights is minimal.

    Ties in the projection break to the smallest matrix index, which is the
    first occurrence because front member indices are ascending.
    """
    return select_with_front(matrix, pareto_front(matrix), weights)


def sweep(
    matrix: EvaluationMatrix, weight_rows: Sequence[Sequence[float]]
) -> list[tuple[tuple[float, ...], SelectionResult]]:
    """Run :func:`select` for each weight row, in order.

    Every row is validated before any selection runs, so an invalid row
    aborts the whole sweep; the error names the offending row index.
    """
    for i, row in enumerate(weight_rows):
        try:
            check_weights(row, matrix.n_criteria, name="significance weights")
        except MTMCError as exc:
            raise MTMCError(f"invalid significance weights at sweep row {i}: {exc}") from exc
    return [(tuple(float(v) for v in row), select(matrix, row)) for row in weight_rows]
