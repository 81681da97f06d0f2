"""Command-line interface.

Subcommands map to the case-study artefacts: ``dataset`` (input matrix),
``weights`` (criteria weights), ``rank`` (one score table), ``study`` (all
weighting x ranking pairs with R_score and Spearman summaries).

Exit codes: 0 success, 2 input/validation error, 3 computation error.
"""

from __future__ import annotations

import argparse
import sys

from .data import load_reference_dataset
from .errors import ComputationError, InputError, MCDMError
from .fileio import parse_matrix_file
from .ranking import RANKING_METHODS, RankingMethod, score
from .report import ReportFormat, emit_report
from .stability import run_study
from .weighting import OBJECTIVE_METHODS, WeightingMethod, WeightVector, compute_weights

EXIT_OK, EXIT_INPUT, EXIT_COMPUTE = 0, 2, 3

_WEIGHTING_CHOICES = [m.value.lower() for m in OBJECTIVE_METHODS] + ["external"]
_RANKING_CHOICES = [m.value.lower() for m in RANKING_METHODS]


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="matrix CSV (default: bundled bank dataset)")
    p.add_argument(
        "--as-printed",
        action="store_true",
        help="use the bundled dataset exactly as published (B14/C7 = 1.3010)",
    )
    p.add_argument(
        "--format", choices=[f.value for f in ReportFormat], default="plain", dest="fmt"
    )
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.add_argument(
        "--full-precision", action="store_true", help="print full float precision, not 4 decimals"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcdm-compare",
        description="Objective criteria weighting, alternative ranking and rank-stability study.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dataset", help="dump the input decision matrix")
    _common(p)

    p = sub.add_parser("weights", help="criteria weights")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--method", action="append", choices=_WEIGHTING_CHOICES[:-1], dest="methods")
    g.add_argument("--all", action="store_true", help="all five methods (default)")

    p = sub.add_parser("rank", help="scores and ranks for one weighting x ranking pair")
    _common(p)
    p.add_argument("--weighting", required=True, choices=_WEIGHTING_CHOICES)
    p.add_argument("--method", required=True, choices=_RANKING_CHOICES)
    p.add_argument(
        "--weights",
        metavar="W1,W2,...",
        help="comma-separated weights for --weighting external (rescaled to sum 1)",
    )

    p = sub.add_parser("study", help="full weighting x ranking comparison")
    _common(p)
    p.add_argument("--jobs", type=int, default=1, help="threads for the score tables")
    return parser


def _load(args):
    if args.input:
        return parse_matrix_file(args.input)
    return load_reference_dataset(as_printed=args.as_printed)


def _external(args, matrix) -> WeightVector:
    if not args.weights:
        raise InputError("--weighting external needs --weights")
    try:
        values = [float(v) for v in args.weights.split(",")]
    except ValueError:
        raise InputError(f"cannot parse --weights {args.weights!r}") from None
    if len(values) != matrix.n:
        raise InputError(f"--weights has {len(values)} entries for {matrix.n} criteria")
    return WeightVector.external(values, matrix.criterion_names, normalize=True)


def run(args) -> None:
    matrix = _load(args)
    precision = None if args.full_precision else 4

    if args.command == "dataset":
        obj = matrix
    elif args.command == "weights":
        methods = args.methods or [m.value for m in OBJECTIVE_METHODS]
        obj = [compute_weights(matrix, m) for m in methods]
    elif args.command == "rank":
        if args.weighting == "external":
            weights = _external(args, matrix)
        else:
            if args.weights:
                raise InputError("--weights is only valid with --weighting external")
            weights = compute_weights(matrix, args.weighting)
        obj = score(matrix, weights, RankingMethod.parse(args.method))
    else:
        obj = run_study(matrix, max_workers=args.jobs)

    emit_report(obj, args.fmt, args.output, precision)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        run(args)
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except MCDMError as exc:
        # input, validation and write failures
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
