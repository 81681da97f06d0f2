"""Decision matrix model, normalisation schemes and rank assignment."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

import numpy as np
from scipy.stats import rankdata

from .errors import (
    ConstantColumn,
    DuplicateLabel,
    EmptyMatrix,
    InputError,
    NonFiniteScore,
    NonPositiveEntry,
    RaggedRows,
)

# ranks: rank 1 is best, ties share the mean of the positions they span
RankVector = np.ndarray
Order = Literal["descending", "ascending"]

_BENEFIT_TOKENS = {"max", "benefit", "b", "+"}
_COST_TOKENS = {"min", "cost", "c", "-"}


class Direction(str, enum.Enum):
    BENEFIT = "benefit"
    COST = "cost"

    @classmethod
    def parse(cls, token: "str | Direction") -> "Direction":
        """Accept ``max``/``benefit``/``b`` or ``min``/``cost``/``c``, any case."""
        if isinstance(token, Direction):
            return token
        t = str(token).strip().lower()
        if t in _BENEFIT_TOKENS:
            return cls.BENEFIT
        if t in _COST_TOKENS:
            return cls.COST
        raise InputError(f"unknown criterion direction {token!r}")

    @property
    def short(self) -> str:
        return "B" if self is Direction.BENEFIT else "C"


@dataclass(frozen=True)
class CriterionSpec:
    name: str
    direction: Direction = Direction.BENEFIT

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name.strip():
            raise DuplicateLabel("criterion", str(self.name))
        object.__setattr__(self, "direction", Direction.parse(self.direction))


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """Validated, immutable m x n matrix of strictly positive values.

    Build instances through :func:`validate_matrix`; the constructor runs the
    same checks. ``values`` is a read-only float64 array.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        alternatives = tuple(self.alternatives)
        criteria = tuple(
            c if isinstance(c, CriterionSpec) else CriterionSpec(*c) for c in self.criteria
        )
        values = _check_values(alternatives, criteria, self.values)
        object.__setattr__(self, "alternatives", alternatives)
        object.__setattr__(self, "criteria", criteria)
        object.__setattr__(self, "values", values)

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def n(self) -> int:
        return len(self.criteria)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def criterion_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.criteria)

    @property
    def directions(self) -> tuple[Direction, ...]:
        return tuple(c.direction for c in self.criteria)

    @property
    def benefit(self) -> np.ndarray:
        """Boolean mask, True for benefit criteria."""
        return np.array([c.direction is Direction.BENEFIT for c in self.criteria])

    def __eq__(self, other):
        if not isinstance(other, DecisionMatrix):
            return NotImplemented
        return (
            self.alternatives == other.alternatives
            and self.criteria == other.criteria
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    def __repr__(self):
        return f"DecisionMatrix(m={self.m}, n={self.n}, criteria={list(self.criterion_names)})"

    def take_rows(self, order: Sequence[int]) -> "DecisionMatrix":
        order = list(order)
        return DecisionMatrix(
            tuple(self.alternatives[i] for i in order), self.criteria, self.values[order]
        )

    def take_columns(self, order: Sequence[int]) -> "DecisionMatrix":
        order = list(order)
        return DecisionMatrix(
            self.alternatives, tuple(self.criteria[j] for j in order), self.values[:, order]
        )


def _check_labels(kind: str, labels: Iterable[str]) -> None:
    seen = set()
    for lab in labels:
        if not isinstance(lab, str) or not lab.strip() or lab in seen:
            raise DuplicateLabel(kind, str(lab))
        seen.add(lab)


def _as_float(raw) -> np.ndarray:
    try:
        return np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"non-numeric value in matrix: {exc}") from None


def _check_values(alternatives, criteria, raw) -> np.ndarray:
    if len(alternatives) == 0 or len(criteria) == 0:
        raise EmptyMatrix("a decision matrix needs at least one alternative and one criterion")
    if isinstance(raw, np.ndarray):
        if raw.ndim != 2:
            raise InputError(f"values must be 2-D, got {raw.ndim}-D")
        if raw.shape[1] != len(criteria):
            raise RaggedRows(0, len(criteria), raw.shape[1])
        values = _as_float(raw)
    else:
        rows = [list(r) for r in raw]
        for i, row in enumerate(rows):
            if len(row) != len(criteria):
                raise RaggedRows(i, len(criteria), len(row))
        values = _as_float(rows).reshape(len(rows), len(criteria))
    if values.shape[0] != len(alternatives):
        raise InputError(
            f"{values.shape[0]} value rows for {len(alternatives)} alternative labels"
        )
    if len(alternatives) < 2:
        raise EmptyMatrix("a decision matrix needs at least two alternatives")
    _check_labels("alternative", alternatives)
    _check_labels("criterion", [c.name for c in criteria])

    bad = ~(np.isfinite(values) & (values > 0))
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise NonPositiveEntry(alternatives[i], criteria[j].name, float(values[i, j]))
    constant = values.max(axis=0) == values.min(axis=0)
    if constant.any():
        raise ConstantColumn(criteria[int(np.argmax(constant))].name)

    values = values.copy()
    values.setflags(write=False)
    return values


def validate_matrix(
    alternatives: Sequence[str],
    criteria: Sequence[CriterionSpec | tuple[str, str | Direction] | str],
    values,
    directions: Sequence[str | Direction] | None = None,
) -> DecisionMatrix:
    """Validate a labelled grid and return an immutable :class:`DecisionMatrix`.

    ``criteria`` may hold :class:`CriterionSpec` objects, ``(name, direction)``
    pairs, or bare names combined with a separate ``directions`` sequence.

    Raises one of ``EmptyMatrix``, ``RaggedRows``, ``DuplicateLabel``,
    ``NonPositiveEntry`` or ``ConstantColumn``, each naming the offending
    row or column.
    """
    specs = []
    for j, c in enumerate(criteria):
        if isinstance(c, CriterionSpec):
            specs.append(c)
        elif isinstance(c, str):
            d = directions[j] if directions is not None else Direction.BENEFIT
            specs.append(CriterionSpec(c, Direction.parse(d)))
        else:
            name, d = c
            specs.append(CriterionSpec(name, Direction.parse(d)))
    return DecisionMatrix(tuple(alternatives), tuple(specs), values)


# -- normalisation -----------------------------------------------------------


def sum_normalize(matrix: DecisionMatrix) -> np.ndarray:
    """r_ij = x_ij / sum_i x_ij, so every column sums to one."""
    x = matrix.values
    return x / x.sum(axis=0)


def vector_normalize(matrix: DecisionMatrix) -> np.ndarray:
    """n_ij = x_ij / ||x_.j||_2 with the norm taken over alternatives."""
    x = matrix.values
    return x / np.sqrt((x**2).sum(axis=0))


def minmax_normalize(matrix: DecisionMatrix) -> np.ndarray:
    """Direction-aware min-max rescale onto [0, 1] (1 = best value in column)."""
    x = matrix.values
    lo, hi = x.min(axis=0), x.max(axis=0)
    span = hi - lo
    return np.where(matrix.benefit, (x - lo) / span, (hi - x) / span)


# -- ranks -------------------------------------------------------------------


def _oriented(scores, order: Order) -> np.ndarray:
    s = np.asarray(scores, dtype=float)
    if s.ndim != 1 or s.size == 0:
        raise NonFiniteScore("scores must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(s)):
        raise NonFiniteScore(f"non-finite score at position {int(np.argmin(np.isfinite(s)))}")
    if order == "descending":
        return -s
    if order == "ascending":
        return s
    raise InputError(f"order must be 'descending' or 'ascending', not {order!r}")


def assign_ranks(scores, order: Order = "descending") -> RankVector:
    """Average ranks (1 = best).

    Tied scores share the mean of the positions they span, so the rank sum
    is always m(m+1)/2. These are the ranks used for correlation.
    """
    return rankdata(_oriented(scores, order), method="average")


def display_ranks(scores, order: Order = "descending") -> np.ndarray:
    """Integer ranks 1..m; ties go to the lower alternative index first."""
    return rankdata(_oriented(scores, order), method="ordinal").astype(int)
