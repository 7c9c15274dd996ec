"""Input validation helpers.

Small ``check_*`` functions in the spirit of scikit-learn's validation
utilities: coerce array-likes to float64 ndarrays and enforce the domain
rules (finiteness, rectangular shape, weights in [0, 1]) in one place.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, EmptyInputError, WeightRangeError


def check_finite_vector(values: Sequence[float], name: str = "vector") -> np.ndarray:
    """Coerce to a 1-D float64 array and require every entry to be finite."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise DimensionMismatchError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ValueError(f"{name} contains a non-finite value at index {bad}")
    return arr


def check_criteria_rows(rows, name: str = "criteria rows") -> np.ndarray:
    """Coerce to a 2-D (n_rows, n_criteria) float64 array.

    Requires at least one row, a rectangular shape and finite entries.
    Lower-is-better orientation is the caller's contract; nothing here
    depends on it.
    """
    try:
        arr = np.asarray(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DimensionMismatchError(f"{name} are not rectangular numeric rows: {exc}") from exc
    if arr.ndim == 1 and arr.size == 0:
        raise EmptyInputError(f"{name} are empty")
    if arr.ndim != 2:
        raise DimensionMismatchError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise EmptyInputError(f"{name} are empty")
    if arr.shape[1] == 0:
        raise DimensionMismatchError(f"{name} must have at least one criterion column")
    if not np.all(np.isfinite(arr)):
        i, j = (int(k) for k in np.argwhere(~np.isfinite(arr))[0])
        raise ValueError(f"{name} contain a non-finite value at row {i}, column {j}")
    return arr


def check_weights(weights: Sequence[float], n_criteria: int, name: str = "weights") -> np.ndarray:
    """Validate a criteria-significance vector: right length, finite, within [0, 1].

    Returns the vector as a float64 array.  Does not apply the all-zero
    fallback; that is :func:`mtmc.core.resolve_weights`' job.
    """
    arr = check_finite_vector(weights, name=name)
    if arr.shape[0] != n_criteria:
        raise DimensionMismatchError(
            f"{name} has {arr.shape[0]} component(s), expected {n_criteria}"
        )
    for i, value in enumerate(arr):
        if value < 0.0 or value > 1.0:
            raise WeightRangeError(
                f"{name} component {i} is {value!r}, outside [0, 1]", component=i
            )
    return arr
