"""Objective criteria-weighting methods.

Every method maps a :class:`DecisionMatrix` to a :class:`WeightVector` on the
unit simplex. The per-step quantities are exposed through the
``*_intermediates`` functions so each stage can be checked on its own.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np

from .errors import DegeneratePV, InvalidWeights, ZeroCriteria
from .matrix import DecisionMatrix, minmax_normalize

SIMPLEX_TOL = 1e-9


class WeightingMethod(str, enum.Enum):
    EQUAL = "Equal"
    ENTROPY = "Entropy"
    MEREC = "MEREC"
    LOPCOW = "LOPCOW"
    SPC = "SPC"
    EXTERNAL = "External"

    @classmethod
    def parse(cls, name: "str | WeightingMethod") -> "WeightingMethod":
        if isinstance(name, WeightingMethod):
            return name
        for member in cls:
            if member.value.lower() == str(name).strip().lower():
                return member
        raise InvalidWeights(f"unknown weighting method {name!r}")


# the five objective methods, in report order
OBJECTIVE_METHODS = (
    WeightingMethod.EQUAL,
    WeightingMethod.ENTROPY,
    WeightingMethod.MEREC,
    WeightingMethod.LOPCOW,
    WeightingMethod.SPC,
)


@dataclass(frozen=True, eq=False)
class WeightVector:
    method: WeightingMethod
    weights: np.ndarray = field(repr=False)
    criteria: tuple[str, ...] | None = None

    def __post_init__(self):
        method = WeightingMethod.parse(self.method)
        w = np.array(self.weights, dtype=float).ravel()
        if w.size == 0:
            raise ZeroCriteria("a weight vector needs at least one criterion")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise InvalidWeights(f"weights must be finite and non-negative: {w}")
        if abs(w.sum() - 1.0) > SIMPLEX_TOL:
            raise InvalidWeights(f"weights sum to {w.sum()!r}, not 1")
        if self.criteria is not None and len(self.criteria) != w.size:
            raise InvalidWeights(f"{w.size} weights for {len(self.criteria)} criteria")
        w.setflags(write=False)
        object.__setattr__(self, "method", method)
        object.__setattr__(self, "weights", w)
        if self.criteria is not None:
            object.__setattr__(self, "criteria", tuple(self.criteria))

    def __len__(self):
        return self.weights.size

    def __repr__(self):
        return f"WeightVector({self.method.value}, {np.round(self.weights, 4).tolist()})"

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return (
            self.method is other.method
            and self.criteria == other.criteria
            and np.array_equal(self.weights, other.weights)
        )

    __hash__ = None

    @classmethod
    def external(cls, weights: Sequence[float], criteria=None, normalize: bool = False):
        """Wrap user-supplied weights; ``normalize`` rescales them onto the simplex."""
        w = np.asarray(weights, dtype=float)
        if normalize:
            if w.sum() <= 0:
                raise InvalidWeights("weights must have a positive sum")
            w = w / w.sum()
        return cls(WeightingMethod.EXTERNAL, w, criteria)


def _normalize(values: np.ndarray) -> np.ndarray:
    return values / values.sum()


# -- Equal -------------------------------------------------------------------


def equal_weights(n: int | DecisionMatrix) -> WeightVector:
    criteria = None
    if isinstance(n, DecisionMatrix):
        criteria, n = n.criterion_names, n.n
    if n < 1:
        raise ZeroCriteria("need at least one criterion")
    return WeightVector(WeightingMethod.EQUAL, np.full(n, 1.0 / n), criteria)


# -- Entropy -----------------------------------------------------------------


@dataclass(frozen=True)
class EntropyIntermediates:
    n_ij: np.ndarray  # x_ij / (m + sum_i x_ij^2)
    e_j: np.ndarray


def entropy_intermediates(
    matrix: DecisionMatrix, second_term: Literal["minus", "plus"] = "minus"
) -> EntropyIntermediates:
    """Entropy measure with the ``m + sum x^2`` denominator.

    ``second_term`` selects the sign in front of the ``(1 - S) ln(1 - S)``
    correction, S being the column sum of n_ij. ``"minus"`` is the standard
    form; ``"plus"`` exists only for variant audits.
    """
    x = matrix.values
    m = matrix.m
    nij = x / (m + (x**2).sum(axis=0))
    s = nij.sum(axis=0)
    sign = -1.0 if second_term == "minus" else 1.0
    e = (nij * np.log(nij)).sum(axis=0) + sign * (1 - s) * np.log(1 - s)
    return EntropyIntermediates(nij, e)


def entropy_weights(
    matrix: DecisionMatrix, second_term: Literal["minus", "plus"] = "minus"
) -> WeightVector:
    e = entropy_intermediates(matrix, second_term).e_j
    return WeightVector(WeightingMethod.ENTROPY, _normalize(1 - e), matrix.criterion_names)


# -- MEREC -------------------------------------------------------------------


@dataclass(frozen=True)
class MerecIntermediates:
    n_ij: np.ndarray
    S_i: np.ndarray
    S_prime: np.ndarray  # (m, n): performance with criterion j removed
    E_j: np.ndarray


def merec_intermediates(matrix: DecisionMatrix) -> MerecIntermediates:
    x = matrix.values
    n = matrix.n
    nij = np.where(matrix.benefit, x.min(axis=0) / x, x / x.max(axis=0))
    logs = np.abs(np.log(nij))
    total = logs.sum(axis=1)
    s = np.log1p(total / n)
    # the 1/n prefactor is kept when a term is dropped
    s_prime = np.log1p((total[:, None] - logs) / n)
    effect = np.abs(s_prime - s[:, None]).sum(axis=0)
    return MerecIntermediates(nij, s, s_prime, effect)


def merec_weights(matrix: DecisionMatrix) -> WeightVector:
    effect = merec_intermediates(matrix).E_j
    return WeightVector(WeightingMethod.MEREC, _normalize(effect), matrix.criterion_names)


# -- LOPCOW ------------------------------------------------------------------


@dataclass(frozen=True)
class LopcowIntermediates:
    r_ij: np.ndarray
    PV_j: np.ndarray


def lopcow_intermediates(matrix: DecisionMatrix, std_scaled: bool = True) -> LopcowIntermediates:
    """Percentage values from the root mean square of min-max scores.

    With ``std_scaled`` (default) the RMS is divided by the population
    standard deviation of the raw column before the log:
    ``PV_j = 100 * |ln(rms_j / sigma_j)|``. This is the form that
    reproduces the bank case-study weights. ``std_scaled=False`` gives
    ``100 * |ln(rms_j)|``.
    """
    r = minmax_normalize(matrix)
    ratio = np.sqrt((r**2).sum(axis=0) / matrix.m)
    if std_scaled:
        ratio = ratio / matrix.values.std(axis=0)
    return LopcowIntermediates(r, np.abs(np.log(ratio)) * 100)


def lopcow_weights(matrix: DecisionMatrix, std_scaled: bool = True) -> WeightVector:
    pv = lopcow_intermediates(matrix, std_scaled).PV_j
    if not pv.sum() > 0:
        raise DegeneratePV("every percentage value is zero; LOPCOW weights are undefined")
    return WeightVector(WeightingMethod.LOPCOW, _normalize(pv), matrix.criterion_names)


# -- SPC ---------------------------------------------------------------------


@dataclass(frozen=True)
class SpcIntermediates:
    SPC_j: np.ndarray
    D: np.ndarray
    R: np.ndarray
    Q: np.ndarray


def spc_intermediates(matrix: DecisionMatrix) -> SpcIntermediates:
    x = matrix.values
    m = matrix.m
    midpoint = (x.max(axis=0) + x.min(axis=0)) / 2
    d = np.abs(x - midpoint)
    # numerator is the column total of d; only the denominator varies by row
    r = np.abs(d.sum(axis=0) / (m * x))
    q = r.mean(axis=0)
    return SpcIntermediates(midpoint, d, r, q)


def spc_weights(matrix: DecisionMatrix) -> WeightVector:
    q = spc_intermediates(matrix).Q
    return WeightVector(WeightingMethod.SPC, _normalize(q), matrix.criterion_names)


# -- dispatch ----------------------------------------------------------------

WEIGHTING_FUNCTIONS: dict[WeightingMethod, Callable[[DecisionMatrix], WeightVector]] = {
    WeightingMethod.EQUAL: equal_weights,
    WeightingMethod.ENTROPY: entropy_weights,
    WeightingMethod.MEREC: merec_weights,
    WeightingMethod.LOPCOW: lopcow_weights,
    WeightingMethod.SPC: spc_weights,
}


def compute_weights(matrix: DecisionMatrix, method: str | WeightingMethod) -> WeightVector:
    method = WeightingMethod.parse(method)
    if method is WeightingMethod.EXTERNAL:
        raise InvalidWeights("external weights are supplied by the caller, not computed")
    return WEIGHTING_FUNCTIONS[method](matrix)


def max_min_ratios(vectors: Sequence[WeightVector]) -> np.ndarray:
    """Per-criterion max/min weight across several methods."""
    w = np.vstack([v.weights for v in vectors])
    return w.max(axis=0) / w.min(axis=0)
