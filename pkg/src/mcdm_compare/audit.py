"""Formula-variant audit against the reference weights and RAM ordering.

Several steps of the weighting methods admit more than one reading (the
sign of the entropy correction term, whether LOPCOW scales by the column
standard deviation, which B14/C7 value the bank data holds). This module
evaluates each reading against the reference weight table so the pinned
defaults can be justified by numbers rather than assertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np

from . import reference
from .data import load_reference_dataset
from .matrix import DecisionMatrix, display_ranks
from .ranking import ram_index, ram_sums
from .weighting import (
    WeightVector,
    entropy_weights,
    equal_weights,
    lopcow_weights,
    merec_weights,
    spc_weights,
)

WEIGHT_TOLERANCE = 5e-4

# method -> {variant name: weight function}; the first entry is the default
VARIANTS: dict[str, dict[str, Callable[[DecisionMatrix], WeightVector]]] = {
    "Equal": {"1/n": equal_weights},
    "Entropy": {
        "minus correction term": partial(entropy_weights, second_term="minus"),
        "plus correction term": partial(entropy_weights, second_term="plus"),
    },
    "MEREC": {"natural log, 1/n in both sums": merec_weights},
    "LOPCOW": {
        "rms / population std": partial(lopcow_weights, std_scaled=True),
        "rms only": partial(lopcow_weights, std_scaled=False),
    },
    "SPC": {"column-total numerator": spc_weights},
}


@dataclass(frozen=True)
class AuditRow:
    method: str
    variant: str
    dataset: str
    weights: np.ndarray
    max_abs_dev: float

    @property
    def reproduces(self) -> bool:
        return self.max_abs_dev <= WEIGHT_TOLERANCE


def audit_weights() -> list[AuditRow]:
    """Every (method, variant, dataset) reading against the reference weights."""
    datasets = {
        "reconciled": load_reference_dataset(),
        "as printed": load_reference_dataset(as_printed=True),
    }
    rows = []
    for method, variants in VARIANTS.items():
        expected = np.array(reference.WEIGHTS[method])
        for variant, fn in variants.items():
            for ds_name, matrix in datasets.items():
                w = fn(matrix).weights
                rows.append(AuditRow(method, variant, ds_name, w, float(np.abs(w - expected).max())))
    return rows


@dataclass(frozen=True)
class RamFormulaCheck:
    formula: str
    b15_score: float
    b15_rank: int
    mean_score: float


def audit_ram_formula(matrix: DecisionMatrix | None = None) -> list[RamFormulaCheck]:
    """B15 under equal weights with both candidate RAM final-score formulas."""
    matrix = matrix if matrix is not None else load_reference_dataset()
    s_plus, s_minus = ram_sums(matrix, equal_weights(matrix))
    i = matrix.alternatives.index("B15")
    out = []
    for formula in ("root", "fraction"):
        scores = ram_index(s_plus, s_minus, formula)
        out.append(
            RamFormulaCheck(
                formula,
                float(scores[i]),
                int(display_ranks(scores)[i]),
                float(scores.mean()),
            )
        )
    return out


def format_audit(rows: list[AuditRow]) -> str:
    lines = [f"{'method':8} {'variant':32} {'dataset':11} {'max|dev|':>9}  ok  weights"]
    for r in rows:
        lines.append(
            f"{r.method:8} {r.variant:32} {r.dataset:11} {r.max_abs_dev:9.4f}  "
            f"{'yes' if r.reproduces else 'no ':3} {np.round(r.weights, 4).tolist()}"
        )
    return "\n".join(lines)
