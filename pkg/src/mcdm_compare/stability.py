"""Rank-stability metrics and the full weighting x ranking comparison study."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import (
    LengthMismatch,
    MCDMError,
    MixedAlternativeSets,
    MixedRankingMethods,
    StudyError,
    ZeroMinScore,
)
from .matrix import DecisionMatrix
from .ranking import RANKING_FUNCTIONS, RANKING_METHODS, RankingMethod, ScoreTable
from .weighting import OBJECTIVE_METHODS, WeightingMethod, WeightVector, compute_weights


def r_score(scores) -> float:
    """Spread of a score column, max / min. Lower means a tighter spread."""
    s = np.asarray(scores, dtype=float)
    lo = s.min()
    if lo <= 0:
        raise ZeroMinScore(f"minimum score is {lo!r}; the max/min ratio is undefined")
    return float(s.max() / lo)


def spearman(ranks_a, ranks_b) -> float:
    """1 - 6 sum(D^2) / (m (m^2 - 1)) on two rank vectors.

    Tied positions should already carry average ranks; no tie correction
    is applied.
    """
    a = np.asarray(ranks_a, dtype=float)
    b = np.asarray(ranks_b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise LengthMismatch(f"rank vectors have shapes {a.shape} and {b.shape}")
    m = a.size
    if m < 2:
        raise LengthMismatch("need at least two ranked alternatives")
    d2 = float(((a - b) ** 2).sum())
    return 1.0 - 6.0 * d2 / (m * (m * m - 1))


@dataclass(frozen=True, eq=False)
class SpearmanMatrix:
    ranking_method: RankingMethod
    labels: tuple[WeightingMethod, ...]
    matrix: np.ndarray = field(repr=False)
    average: float

    def __getitem__(self, pair: tuple) -> float:
        a, b = (WeightingMethod.parse(p) for p in pair)
        return float(self.matrix[self.labels.index(a), self.labels.index(b)])

    def upper_triangle(self) -> list[tuple[WeightingMethod, WeightingMethod, float]]:
        return [
            (self.labels[i], self.labels[j], float(self.matrix[i, j]))
            for i, j in combinations(range(len(self.labels)), 2)
        ]

    def minimum(self) -> tuple[WeightingMethod, WeightingMethod, float]:
        return min(self.upper_triangle(), key=lambda t: t[2])


def pairwise_spearman(tables: Sequence[ScoreTable]) -> SpearmanMatrix:
    """Symmetric Spearman matrix over several weightings of one ranking method.

    ``average`` is the mean of the distinct off-diagonal pairs.
    """
    tables = list(tables)
    if len(tables) < 2:
        raise LengthMismatch("need at least two score tables")
    methods = {t.ranking_method for t in tables}
    if len(methods) > 1:
        raise MixedRankingMethods(f"tables mix ranking methods {sorted(m.value for m in methods)}")
    alts = {t.alternatives for t in tables}
    if len(alts) > 1:
        raise MixedAlternativeSets("tables rank different alternatives")

    k = len(tables)
    out = np.eye(k)
    for i, j in combinations(range(k), 2):
        out[i, j] = out[j, i] = spearman(tables[i].ranks, tables[j].ranks)
    out.setflags(write=False)
    upper = out[np.triu_indices(k, 1)]
    return SpearmanMatrix(
        tables[0].ranking_method,
        tuple(t.weighting_method for t in tables),
        out,
        float(upper.mean()),
    )


@dataclass(frozen=True, eq=False)
class StudyReport:
    """Results of every weighting x ranking combination on one matrix."""

    matrix: DecisionMatrix = field(repr=False)
    weightings: tuple[WeightingMethod, ...]
    rankings: tuple[RankingMethod, ...]
    weights: dict[WeightingMethod, WeightVector] = field(repr=False)
    score_tables: dict[tuple[WeightingMethod, RankingMethod], ScoreTable] = field(repr=False)
    r_scores: np.ndarray = field(repr=False)  # rows: rankings, columns: weightings
    spearman_matrices: dict[RankingMethod, SpearmanMatrix] = field(repr=False)

    def table(self, weighting, ranking) -> ScoreTable:
        return self.score_tables[WeightingMethod.parse(weighting), RankingMethod.parse(ranking)]

    def r_score_of(self, weighting, ranking) -> float:
        i = self.rankings.index(RankingMethod.parse(ranking))
        j = self.weightings.index(WeightingMethod.parse(weighting))
        return float(self.r_scores[i, j])

    @property
    def spearman_averages(self) -> dict[RankingMethod, float]:
        return {r: s.average for r, s in self.spearman_matrices.items()}

    def __eq__(self, other):
        if not isinstance(other, StudyReport):
            return NotImplemented
        return (
            self.matrix == other.matrix
            and self.weightings == other.weightings
            and self.rankings == other.rankings
            and self.weights == other.weights
            and self.score_tables == other.score_tables
            and np.array_equal(self.r_scores, other.r_scores)
            and all(
                np.array_equal(self.spearman_matrices[r].matrix, other.spearman_matrices[r].matrix)
                for r in self.rankings
            )
        )

    __hash__ = None


def _annotate(weighting, ranking, fn, *args):
    try:
        return fn(*args)
    except StudyError:
        raise
    except MCDMError as exc:
        raise StudyError(weighting.value, ranking.value if ranking else None, exc) from exc


def run_study(
    matrix: DecisionMatrix,
    weightings: Sequence[WeightingMethod | WeightVector] = OBJECTIVE_METHODS,
    rankings: Sequence[RankingMethod] = RANKING_METHODS,
    max_workers: int | None = None,
) -> StudyReport:
    """Evaluate every weighting x ranking pair and the stability metrics.

    ``weightings`` may mix method names with ready-made :class:`WeightVector`
    objects (e.g. externally supplied weights). With ``max_workers`` the
    score tables are computed on a thread pool; results are merged in
    weighting-major, ranking-minor order either way, so the report is
    identical to a serial run.
    """
    rankings = tuple(RankingMethod.parse(r) for r in rankings)
    weights: dict[WeightingMethod, WeightVector] = {}
    for item in weightings:
        if isinstance(item, WeightVector):
            weights[item.method] = item
        else:
            method = WeightingMethod.parse(item)
            weights[method] = _annotate(method, None, compute_weights, matrix, method)
    order = tuple(weights)

    jobs = [(w, r) for w in order for r in rankings]

    def run(job):
        w, r = job
        return _annotate(w, r, RANKING_FUNCTIONS[r], matrix, weights[w])

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]
    tables = dict(zip(jobs, results))

    grid = np.empty((len(rankings), len(order)))
    for i, r in enumerate(rankings):
        for j, w in enumerate(order):
            grid[i, j] = _annotate(w, r, r_score, tables[w, r].scores)
    grid.setflags(write=False)

    spearmans = {}
    if len(order) >= 2:
        for r in rankings:
            spearmans[r] = pairwise_spearman([tables[w, r] for w in order])

    return StudyReport(matrix, order, rankings, weights, tables, grid, spearmans)
