"""Alternative-ranking methods: Probability, TOPSIS and RAM.

Each takes a validated matrix and a weight vector and returns a
:class:`ScoreTable`. In all three the larger score is the better one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

from .errors import DegenerateDistances, InputError, InvalidWeights
from .matrix import DecisionMatrix, assign_ranks, display_ranks, sum_normalize, vector_normalize
from .weighting import WeightingMethod, WeightVector


class RankingMethod(str, enum.Enum):
    PROBABILITY = "Probability"
    TOPSIS = "TOPSIS"
    RAM = "RAM"

    @classmethod
    def parse(cls, name: "str | RankingMethod") -> "RankingMethod":
        if isinstance(name, RankingMethod):
            return name
        for member in cls:
            if member.value.lower() == str(name).strip().lower():
                return member
        raise InputError(f"unknown ranking method {name!r}")


RANKING_METHODS = (RankingMethod.PROBABILITY, RankingMethod.TOPSIS, RankingMethod.RAM)


@dataclass(frozen=True, eq=False)
class ScoreTable:
    """Scores and ranks of every alternative for one (weighting, ranking) pair.

    ``ranks`` are average ranks (used for correlation); ``display_ranks``
    are integers with ties broken by alternative order.
    """

    ranking_method: RankingMethod
    weighting_method: WeightingMethod
    alternatives: tuple[str, ...]
    scores: np.ndarray = field(repr=False)
    ranks: np.ndarray = field(init=False, repr=False)
    display_ranks: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        scores = np.array(self.scores, dtype=float)
        if scores.shape != (len(self.alternatives),):
            raise InputError(f"{scores.size} scores for {len(self.alternatives)} alternatives")
        ranks = assign_ranks(scores, "descending")
        shown = display_ranks(scores, "descending")
        for arr in (scores, ranks, shown):
            arr.setflags(write=False)
        object.__setattr__(self, "ranking_method", RankingMethod.parse(self.ranking_method))
        object.__setattr__(self, "weighting_method", WeightingMethod.parse(self.weighting_method))
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "scores", scores)
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "display_ranks", shown)

    @property
    def m(self) -> int:
        return len(self.alternatives)

    def score_of(self, alternative: str) -> float:
        return float(self.scores[self.alternatives.index(alternative)])

    def rank_of(self, alternative: str) -> int:
        return int(self.display_ranks[self.alternatives.index(alternative)])

    def order(self) -> list[str]:
        """Alternatives from best to worst."""
        return [self.alternatives[i] for i in np.argsort(self.display_ranks)]

    def __eq__(self, other):
        if not isinstance(other, ScoreTable):
            return NotImplemented
        return (
            self.ranking_method is other.ranking_method
            and self.weighting_method is other.weighting_method
            and self.alternatives == other.alternatives
            and np.array_equal(self.scores, other.scores)
        )

    __hash__ = None


def _weights(matrix: DecisionMatrix, weights) -> WeightVector:
    if not isinstance(weights, WeightVector):
        weights = WeightVector.external(weights)
    if len(weights) != matrix.n:
        raise InvalidWeights(f"{len(weights)} weights for {matrix.n} criteria")
    return weights


# -- Probability -------------------------------------------------------------


def favorable_probabilities(matrix: DecisionMatrix) -> np.ndarray:
    """P_ij: linear in x for benefit criteria, in (max + min - x) for cost.

    Both branches are scaled so each column sums to one.
    """
    x = matrix.values
    m = matrix.m
    hi, lo = x.max(axis=0), x.min(axis=0)
    alpha = 1.0 / x.sum(axis=0)
    beta = 1.0 / (m * (hi + lo - x.mean(axis=0)))
    return np.where(matrix.benefit, alpha * x, beta * (hi + lo - x))


def probability_scores(matrix: DecisionMatrix, weights) -> ScoreTable:
    w = _weights(matrix, weights)
    p = favorable_probabilities(matrix)
    # weighted geometric product; a zero weight drops its factor
    scores = np.prod(p**w.weights, axis=1)
    return ScoreTable(RankingMethod.PROBABILITY, w.method, matrix.alternatives, scores)


# -- TOPSIS ------------------------------------------------------------------


@dataclass(frozen=True)
class IdealPoints:
    positive: np.ndarray
    negative: np.ndarray


def weighted_vector_normalized(matrix: DecisionMatrix, weights) -> np.ndarray:
    return vector_normalize(matrix) * _weights(matrix, weights).weights


def ideal_points(matrix: DecisionMatrix, weights) -> IdealPoints:
    """Best and worst weighted normalised value per criterion.

    Best is the column max for benefit criteria and the min for cost ones.
    """
    y = weighted_vector_normalized(matrix, weights)
    hi, lo = y.max(axis=0), y.min(axis=0)
    b = matrix.benefit
    return IdealPoints(np.where(b, hi, lo), np.where(b, lo, hi))


def topsis_distances(matrix: DecisionMatrix, weights) -> tuple[np.ndarray, np.ndarray]:
    """Euclidean distances (to positive ideal, to negative ideal)."""
    y = weighted_vector_normalized(matrix, weights)
    ideal = ideal_points(matrix, weights)
    d_pos = np.sqrt(((y - ideal.positive) ** 2).sum(axis=1))
    d_neg = np.sqrt(((y - ideal.negative) ** 2).sum(axis=1))
    return d_pos, d_neg


def topsis_scores(matrix: DecisionMatrix, weights) -> ScoreTable:
    w = _weights(matrix, weights)
    d_pos, d_neg = topsis_distances(matrix, w)
    total = d_pos + d_neg
    if np.any(total == 0):
        i = int(np.argmin(total))
        raise DegenerateDistances(
            f"{matrix.alternatives[i]} is at zero distance from both ideal points"
        )
    return ScoreTable(RankingMethod.TOPSIS, w.method, matrix.alternatives, d_neg / total)


# -- RAM ---------------------------------------------------------------------

RamFormula = Literal["root", "fraction"]


def ram_sums(matrix: DecisionMatrix, weights) -> tuple[np.ndarray, np.ndarray]:
    """Weighted sum-normalised totals over benefit and over cost criteria."""
    y = sum_normalize(matrix) * _weights(matrix, weights).weights
    b = matrix.benefit
    return y[:, b].sum(axis=1), y[:, ~b].sum(axis=1)


def ram_index(s_plus, s_minus, formula: RamFormula = "root") -> np.ndarray:
    """Final RAM score from the benefit and cost totals.

    ``"root"``: ``(2 + S+) ** (1 / (2 + S-))``, the Root Assessment Method
    definition and the form that reproduces the bank case study.
    ``"fraction"``: ``(2 + S-) / sqrt(2 + S+)``, which rewards cost and is
    kept only to demonstrate that it inverts the ordering.
    """
    s_plus = np.asarray(s_plus, dtype=float)
    s_minus = np.asarray(s_minus, dtype=float)
    if formula == "root":
        return (2 + s_plus) ** (1 / (2 + s_minus))
    if formula == "fraction":
        return (2 + s_minus) / np.sqrt(2 + s_plus)
    raise InputError(f"unknown RAM formula {formula!r}")


def ram_scores(matrix: DecisionMatrix, weights, formula: RamFormula = "root") -> ScoreTable:
    w = _weights(matrix, weights)
    s_plus, s_minus = ram_sums(matrix, w)
    scores = ram_index(s_plus, s_minus, formula)
    return ScoreTable(RankingMethod.RAM, w.method, matrix.alternatives, scores)


RANKING_FUNCTIONS: dict[RankingMethod, Callable[[DecisionMatrix, WeightVector], ScoreTable]] = {
    RankingMethod.PROBABILITY: probability_scores,
    RankingMethod.TOPSIS: topsis_scores,
    RankingMethod.RAM: ram_scores,
}


def score(matrix: DecisionMatrix, weights, method: str | RankingMethod) -> ScoreTable:
    return RANKING_FUNCTIONS[RankingMethod.parse(method)](matrix, weights)
