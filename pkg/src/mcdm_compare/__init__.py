"""Objective criteria weighting, alternative ranking and rank-stability analysis.

Five weighting methods (Equal, Entropy, MEREC, LOPCOW, SPC), three ranking
methods (Probability, TOPSIS, RAM) and the R_score / Spearman comparison of
every combination, with the 19-bank financial performance dataset bundled.

>>> from mcdm_compare import load_reference_dataset, run_study
>>> report = run_study(load_reference_dataset())
>>> report.table("Entropy", "Probability").order()[:4]
['B7', 'B5', 'B6', 'B3']
"""

from .data import load_reference_dataset
from .errors import (
    ComputationError,
    ConstantColumn,
    DegenerateDistances,
    DegeneratePV,
    DuplicateLabel,
    EmptyMatrix,
    InputError,
    LengthMismatch,
    MCDMError,
    MixedAlternativeSets,
    MixedRankingMethods,
    NonFiniteScore,
    NonPositiveEntry,
    ParseError,
    RaggedRows,
    StudyError,
    UnknownDirectionToken,
    WriteFailure,
    ZeroCriteria,
    ZeroMinScore,
)
from .fileio import format_matrix, parse_matrix_file
from .matrix import (
    CriterionSpec,
    DecisionMatrix,
    Direction,
    assign_ranks,
    display_ranks,
    minmax_normalize,
    sum_normalize,
    validate_matrix,
    vector_normalize,
)
from .ranking import (
    IdealPoints,
    RankingMethod,
    ScoreTable,
    probability_scores,
    ram_scores,
    topsis_scores,
)
from .report import ReportFormat, emit_report, render
from .stability import SpearmanMatrix, StudyReport, pairwise_spearman, r_score, run_study, spearman
from .weighting import (
    WeightingMethod,
    WeightVector,
    entropy_weights,
    equal_weights,
    lopcow_weights,
    merec_weights,
    spc_weights,
)

__version__ = "0.1.0"
