"""Unit tests for the evaluation matrix container and its serialization."""

from __future__ import annotations

import numpy as np
import pytest

from mtmc.errors import MatrixFormatError
from mtmc.matrix import Combination, EvaluationMatrix

from conftest import random_rows


def two_task_matrix() -> EvaluationMatrix:
    combo = Combination(
        id="c0",
        hyperparameters={"base_lr": "0.001"},
        per_task={
            "t0": (0.2, 0.01, 3.0, 1.0),
            "t1": (0.4, 0.03, 5.0, 3.0),
        },
        aggregated=(0.3, 0.02, 4.0, 2.0),
    )
    return EvaluationMatrix(
        criteria_names=("error_mean", "error_var", "epoch_mean", "epoch_var"),
        tasks=("t0", "t1"),
        combinations=(combo,),
    )


class TestInvariants:
    def test_aggregated_must_be_task_mean(self):
        matrix = two_task_matrix()
        assert matrix.combinations[0].aggregated == (0.3, 0.02, 4.0, 2.0)

    def test_aggregated_off_by_more_than_tolerance_rejected(self):
        with pytest.raises(MatrixFormatError, match="mean"):
            EvaluationMatrix(
                criteria_names=("a",),
                tasks=("t0", "t1"),
                combinations=(
                    Combination(
                        id="c0",
                        per_task={"t0": (0.2,), "t1": (0.4,)},
                        aggregated=(0.3001,),
                    ),
                ),
            )

    def test_duplicate_combination_id_rejected(self):
        with pytest.raises(MatrixFormatError, match="duplicate"):
            EvaluationMatrix.from_aggregated([(1.0,), (2.0,)], ids=["c0", "c0"])

    def test_empty_combination_id_rejected(self):
        with pytest.raises(MatrixFormatError, match="non-empty"):
            EvaluationMatrix.from_aggregated([(1.0,)], ids=[""])

    def test_vector_width_mismatch_rejected(self):
        with pytest.raises(MatrixFormatError, match="expected 2"):
            EvaluationMatrix(
                criteria_names=("a", "b"),
                tasks=("t0",),
                combinations=(
                    Combination(id="c0", per_task={"t0": (1.0,)}, aggregated=(1.0,)),
                ),
            )

    def test_task_coverage_mismatch_rejected(self):
        with pytest.raises(MatrixFormatError, match="covers tasks"):
            EvaluationMatrix(
                criteria_names=("a",),
                tasks=("t0", "t1"),
                combinations=(
                    Combination(id="c0", per_task={"t0": (1.0,)}, aggregated=(1.0,)),
                ),
            )

    def test_non_finite_value_rejected(self):
        with pytest.raises(MatrixFormatError, match="non-finite"):
            EvaluationMatrix.from_aggregated([(float("nan"), 1.0)])

    def test_no_criteria_rejected(self):
        with pytest.raises(MatrixFormatError, match="at least one criterion"):
            EvaluationMatrix(criteria_names=(), tasks=(), combinations=())

    def test_duplicate_criteria_names_rejected(self):
        with pytest.raises(MatrixFormatError, match="unique"):
            EvaluationMatrix(criteria_names=("a", "a"), tasks=(), combinations=())

    def test_empty_matrix_allowed(self):
        matrix = EvaluationMatrix(criteria_names=("a",), tasks=(), combinations=())
        assert matrix.n_combinations == 0
        assert matrix.aggregated_rows().shape == (0, 1)


class TestFromAggregated:
    def test_defaults(self):
        matrix = EvaluationMatrix.from_aggregated([(1.0, 2.0), (3.0, 4.0)])
        assert matrix.ids() == ("c0", "c1")
        assert matrix.criteria_names == ("criterion_0", "criterion_1")
        assert matrix.tasks == ("t0",)
        assert matrix.combinations[0].per_task == {"t0": (1.0, 2.0)}

    def test_custom_ids_and_hyperparameters(self):
        matrix = EvaluationMatrix.from_aggregated(
            [(1.0,)], ids=["best"], hyperparameters=[{"lr": "0.1"}]
        )
        assert matrix.combinations[0].id == "best"
        assert matrix.combinations[0].hyperparameters == {"lr": "0.1"}

    def test_rows_preserved_exactly(self):
        rng = np.random.default_rng(1)
        rows = random_rows(rng, 10, 3)
        matrix = EvaluationMatrix.from_aggregated(rows)
        assert [tuple(r) for r in matrix.aggregated_rows()] == rows


class TestShapeAccessors:
    def test_counts(self):
        matrix = two_task_matrix()
        assert matrix.n_criteria == 4
        assert matrix.n_combinations == 1
        assert matrix.n_tasks == 2

    def test_hyperparameter_names_sorted_union(self):
        matrix = EvaluationMatrix.from_aggregated(
            [(1.0,), (2.0,)],
            hyperparameters=[{"b": "1", "a": "2"}, {"c": "3"}],
        )
        assert matrix.hyperparameter_names() == ("a", "b", "c")


class TestSerialization:
    def test_round_trip_is_identity(self):
        matrix = two_task_matrix()
        assert EvaluationMatrix.from_json(matrix.to_json()) == matrix

    def test_floats_round_trip_exactly(self):
        rows = [(0.1 + 0.2, 1e-300), (0.30000000000000004, 5e-324)]
        matrix = EvaluationMatrix.from_aggregated(rows)
        back = EvaluationMatrix.from_json(matrix.to_json())
        assert [c.aggregated for c in back.combinations] == [
            c.aggregated for c in matrix.combinations
        ]

    def test_save_load_round_trip(self, tmp_path):
        matrix = two_task_matrix()
        path = tmp_path / "matrix.json"
        matrix.save(path)
        assert EvaluationMatrix.load(path) == matrix

    def test_dict_shape(self):
        payload = two_task_matrix().to_dict()
        assert set(payload) == {"criteria_names", "tasks", "combinations"}
        combo = payload["combinations"][0]
        assert set(combo) == {"id", "hyperparameters", "per_task", "aggregated"}
        assert combo["aggregated"] == [0.3, 0.02, 4.0, 2.0]

    def test_invalid_json_rejected(self):
        with pytest.raises(MatrixFormatError, match="not valid JSON"):
            EvaluationMatrix.from_json("{nope")

    def test_non_object_document_rejected(self):
        with pytest.raises(MatrixFormatError, match="JSON object"):
            EvaluationMatrix.from_json("[1, 2]")

    def test_missing_key_rejected(self):
        with pytest.raises(MatrixFormatError, match="missing key"):
            EvaluationMatrix.from_json('{"criteria_names": ["a"], "tasks": []}')

    def test_non_numeric_value_rejected(self):
        text = (
            '{"criteria_names": ["a"], "tasks": [],'
            ' "combinations": [{"id": "c0", "aggregated": ["x"]}]}'
        )
        with pytest.raises(MatrixFormatError, match="non-numeric"):
            EvaluationMatrix.from_json(text)

    def test_load_missing_file_names_path(self, tmp_path):
        path = tmp_path / "absent.json"
        with pytest.raises(MatrixFormatError, match="absent.json"):
            EvaluationMatrix.load(path)
