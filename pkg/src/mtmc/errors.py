"""Exception types shared across the package.

Everything derives from :class:`MTMCError`, which is itself a ``ValueError``,
so callers can catch either the narrow type or plain ``ValueError``.
"""

from __future__ import annotations

from typing import Sequence


class MTMCError(ValueError):
    """Base class for all validation and data errors raised by this package."""


class DimensionMismatchError(MTMCError):
    """Two vectors (or a vector and a declared width) disagree in length."""


class WeightRangeError(MTMCError):
    """A significance-weight component lies outside [0, 1].

    ``component`` is the zero-based index of the offending entry, so callers
    (CLI, HTTP API) can point at it.
    """

    def __init__(self, message: str, component: int):
        super().__init__(message)
        self.component = component


class EmptyInputError(MTMCError):
    """An operation that needs at least one element received none."""


class LogParseError(MTMCError):
    """A run-log CSV failed to parse; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MatrixBuildError(MTMCError):
    """Building an evaluation matrix failed; ``problems`` lists every offender."""

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        summary = "; ".join(self.problems)
        super().__init__(f"cannot build evaluation matrix: {summary}")


class InsufficientFoldsError(MTMCError):
    """Sample statistics over folds need at least two folds."""


class MatrixFormatError(MTMCError):
    """A serialized evaluation matrix is malformed or violates an invariant."""


class ConfigError(MTMCError):
    """A generator configuration is invalid (e.g. zero-sized dimension)."""
