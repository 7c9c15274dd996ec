"""Multi-task multi-criteria hyperparameter selection.

Given completed evaluation runs over several tasks, this package computes
per-task criteria, aggregates them into an evaluation matrix, extracts the
Pareto front in criteria space, and selects the front member whose
projection onto a criteria-significance vector is minimal.
"""

from .core import (
    ParetoFront,
    SelectionResult,
    dominates,
    pareto_front,
    project,
    resolve_weights,
    scale_front,
    select,
    sweep,
)
from .errors import (
    ConfigError,
    DimensionMismatchError,
    EmptyInputError,
    InsufficientFoldsError,
    LogParseError,
    MatrixBuildError,
    MatrixFormatError,
    MTMCError,
    WeightRangeError,
)
from .estimator import ParetoSelector
from .evaluation import (
    CRITERIA_NAMES,
    CombinationSpec,
    FoldSummary,
    RunRecord,
    build_matrix,
    compute_task_criteria,
    load_combination_specs,
    parse_run_log,
    summarize_fold,
)
from .matrix import Combination, EvaluationMatrix
from .synth import SynthConfig, generate

__version__ = "0.1.0"

__all__ = [
    "CRITERIA_NAMES",
    "Combination",
    "CombinationSpec",
    "ConfigError",
    "DimensionMismatchError",
    "EmptyInputError",
    "EvaluationMatrix",
    "FoldSummary",
    "InsufficientFoldsError",
    "LogParseError",
    "MTMCError",
    "MatrixBuildError",
    "MatrixFormatError",
    "ParetoFront",
    "ParetoSelector",
    "RunRecord",
    "SelectionResult",
    "SynthConfig",
    "WeightRangeError",
    "build_matrix",
    "compute_task_criteria",
    "dominates",
    "generate",
    "load_combination_specs",
    "pareto_front",
    "parse_run_log",
    "project",
    "resolve_weights",
    "scale_front",
    "select",
    "summarize_fold",
    "sweep",
    "__version__",
]
