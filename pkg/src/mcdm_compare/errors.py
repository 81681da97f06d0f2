"""Exception hierarchy.

Two families matter to callers: :class:`InputError` (bad data, bad
arguments; CLI exit code 2) and :class:`ComputationError` (a method hit a
degenerate case on otherwise valid data; CLI exit code 3).
"""

from __future__ import annotations


class MCDMError(Exception):
    """Base class for every error raised by this package."""


class InputError(MCDMError, ValueError):
    pass


class ComputationError(MCDMError, ArithmeticError):
    pass


# -- matrix validation -------------------------------------------------------


class EmptyMatrix(InputError):
    pass


class RaggedRows(InputError):
    def __init__(self, row: int, expected: int, got: int):
        self.row = row
        super().__init__(f"row {row} has {got} values, expected {expected}")


class DuplicateLabel(InputError):
    def __init__(self, kind: str, label: str):
        self.kind = kind
        self.label = label
        super().__init__(f"duplicate or empty {kind} label {label!r}")


class NonPositiveEntry(InputError):
    def __init__(self, row: str, column: str, value: float):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(
            f"entry ({row}, {column}) = {value!r}; all entries must be finite and > 0"
        )


class ConstantColumn(InputError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"criterion {column!r} is constant across alternatives")


class ZeroCriteria(InputError):
    pass


class InvalidWeights(InputError):
    pass


class NonFiniteScore(InputError):
    pass


class LengthMismatch(InputError):
    pass


class MixedRankingMethods(InputError):
    pass


class MixedAlternativeSets(InputError):
    pass


# -- file parsing ------------------------------------------------------------


class ParseError(InputError):
    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class UnknownDirectionToken(ParseError):
    pass


# -- computation -------------------------------------------------------------


class DegeneratePV(ComputationError):
    pass


class DegenerateDistances(ComputationError):
    pass


class ZeroMinScore(ComputationError):
    pass


class StudyError(ComputationError):
    """A component failed inside :func:`run_study`; names the combination."""

    def __init__(self, weighting: str, ranking: str | None, cause: Exception):
        self.weighting = weighting
        self.ranking = ranking
        self.cause = cause
        combo = weighting if ranking is None else f"{weighting} x {ranking}"
        super().__init__(f"[{combo}] {type(cause).__name__}: {cause}")


class WriteFailure(MCDMError, OSError):
    pass
