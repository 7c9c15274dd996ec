"""Scikit-learn style wrapper around the selection mathematics.

``ParetoSelector`` treats the evaluation matrix like training data: ``fit``
takes the (n_combinations, n_criteria) lower-is-better criteria rows and
extracts the Pareto front with its [0, 1] scaling; ``predict`` then answers
significance-weight queries, one selected combination (row index of ``X``)
per query row.  Because it subclasses ``BaseEstimator`` it composes with the
usual ecosystem plumbing (``get_params``, ``clone``, pipelines).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import core
from .validation import check_criteria_rows


class ParetoSelector(BaseEstimator):
    """Select Pareto-optimal rows of a criteria matrix by weighted projection.

    Attributes set by :meth:`fit` (all read-only):

    * ``n_features_in_`` -- number of criteria columns;
    * ``front_indices_`` -- ascending row indices of the non-dominated set;
    * ``front_raw_`` / ``front_scaled_`` -- front criteria, raw and min-max
      scaled per criterion onto [0, 1].

    Example
    -------
    >>> selector = ParetoSelector().fit([[1.0, 2.0], [2.0, 1.0], [2.0, 2.0]])
    >>> selector.front_indices_.tolist()
    [0, 1]
    >>> selector.predict([[1.0, 0.0]]).tolist()
    [0]
    """

    def fit(self, X, y=None) -> "ParetoSelector":
        """Extract and scale the Pareto front of ``X`` (minimization).

        ``X`` is (n_combinations, n_criteria); ``y`` is ignored and accepted
        only for API compatibility.
        """
        X = check_criteria_rows(X, name="criteria matrix")
        self.criteria_ = X.copy()
        self.n_features_in_ = int(X.shape[1])
        members = core.non_dominated_indices(X)
        front_raw = tuple(tuple(float(v) for v in X[i]) for i in members)
        self.front_indices_ = np.asarray(members, dtype=int)
        self.front_raw_ = np.asarray(front_raw, dtype=float)
        self.front_scaled_ = np.asarray(core.scale_front(front_raw), dtype=float)
        return self

    def decision_function(self, W) -> np.ndarray:
        """Projection scores of every front member for each weight row.

        ``W`` is (n_queries, n_criteria) with components in [0, 1]; all-zero
        rows fall back to the midpoint vector.  Returns an array of shape
        (n_queries, front size); lower is better.
        """
        check_is_fitted(self, "front_indices_")
        W = np.asarray(W, dtype=float)
        if W.ndim != 2:
            raise ValueError(
                f"weight queries must be 2-dimensional (n_queries, n_criteria), "
                f"got shape {W.shape}; reshape a single query to (1, -1)"
            )
        scaled = tuple(tuple(float(v) for v in row) for row in self.front_scaled_)
        scores = [
            core.project(scaled, core.resolve_weights(row, self.n_features_in_))
            for row in W
        ]
        return np.asarray(scores, dtype=float)

    def predict(self, W) -> np.ndarray:
        """Selected row index of the fitted criteria matrix for each query.

        Projection ties break to the smallest row index.
        """
        scores = self.decision_function(W)
        positions = np.argmin(scores, axis=1)
        return self.front_indices_[positions]
