"""Run the full study on the bank dataset and diff it against the reference tables.

    python scripts/reproduce_tables.py [--as-printed] [--jobs N]
"""

import argparse

import numpy as np

from mcdm_compare import load_reference_dataset, render, run_study
from mcdm_compare import reference as ref
from mcdm_compare.weighting import max_min_ratios


def diff_lines(report):
    yield "weights: max |computed - reference|"
    for w in ref.WEIGHTING_ORDER:
        dev = np.abs(report.weights[w].weights - ref.WEIGHTS[w]).max()
        yield f"  {w:8} {dev:.4f}"
    ratios = max_min_ratios([report.weights[w] for w in ref.WEIGHTING_ORDER])
    yield f"  max/min  {np.abs(ratios - ref.WEIGHT_MAX_MIN).max():.4f}"

    yield "scores / ranks / R_score per combination"
    for r in ref.RANKING_ORDER:
        for j, w in enumerate(ref.WEIGHTING_ORDER):
            t = report.table(w, r)
            dev = np.abs(t.scores - ref.SCORES[r][w]).max()
            bad = [a for a, g, e in zip(t.alternatives, t.display_ranks, ref.RANKS[r][w]) if g != e]
            rs = report.r_score_of(w, r)
            rel = abs(rs / ref.R_SCORES[r][j] - 1)
            yield f"  {r:11} {w:8} score dev {dev:.4f}  rank diffs {bad or '-'}  R_score {rs:.4f} ({rel:.2%})"

    yield "Spearman: max |dev| and average"
    for r in ref.RANKING_ORDER:
        s = report.spearman_matrices[r]
        vals = np.array([v for _, _, v in s.upper_triangle()])
        dev = np.abs(vals - ref.SPEARMAN[r]).max()
        yield f"  {r:11} pairs dev {dev:.4f}  average {s.average:.4f} (reported {ref.SPEARMAN_AVERAGE_REPORTED[r]})"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--as-printed", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--quiet", action="store_true", help="only the diff summary")
    args = ap.parse_args()

    report = run_study(load_reference_dataset(args.as_printed), max_workers=args.jobs)
    if not args.quiet:
        print(render(report))
    print("\n".join(diff_lines(report)))


if __name__ == "__main__":
    main()
