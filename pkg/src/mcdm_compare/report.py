"""Rendering of weights, score tables and study reports.

Three formats: ``plain`` (aligned text tables laid out like the case-study
tables), ``csv`` (fixed column order, one record per line) and
``structured`` (nested JSON: study -> ranking method -> weighting method).
Numbers are shown with 4 decimals unless ``precision=None``; rounding is
applied to the rendered text only.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from typing import Iterable, Sequence

from .errors import InputError
from .fileio import format_matrix, write_text
from .matrix import DecisionMatrix
from .ranking import ScoreTable
from .stability import SpearmanMatrix, StudyReport
from .weighting import WeightVector, max_min_ratios

DEFAULT_PRECISION = 4


class ReportFormat(str, enum.Enum):
    PLAIN = "plain"
    CSV = "csv"
    STRUCTURED = "structured"


def _num(value: float, precision: int | None) -> str:
    if precision is None:
        return repr(float(value))
    return f"{value:.{precision}f}"


def _jnum(value: float, precision: int | None) -> float:
    return float(value) if precision is None else round(float(value), precision)


def _align(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[k]) for r in rows if k < len(r)) for k in range(max(map(len, rows)))]
    lines = []
    for r in rows:
        cells = [c.ljust(widths[k]) if k == 0 else c.rjust(widths[k]) for k, c in enumerate(r)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _csv(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _criteria_names(vectors: Sequence[WeightVector]) -> list[str]:
    first = vectors[0]
    return list(first.criteria) if first.criteria else [f"C{j + 1}" for j in range(len(first))]


def _as_list(obj, kind):
    if isinstance(obj, kind):
        return [obj]
    items = list(obj)
    if not items or not all(isinstance(i, kind) for i in items):
        raise InputError(f"expected {kind.__name__} objects")
    return items


# -- weights -----------------------------------------------------------------


def weights_plain(vectors: Sequence[WeightVector], precision=DEFAULT_PRECISION) -> str:
    names = _criteria_names(vectors)
    rows = [["Method", *names]]
    rows += [[v.method.value, *(_num(x, precision) for x in v.weights)] for v in vectors]
    if len(vectors) > 1:
        rows.append(["max/min", *(f"{r:.2f}" for r in max_min_ratios(vectors))])
    return _align(rows)


def weights_csv(vectors: Sequence[WeightVector], precision=DEFAULT_PRECISION) -> str:
    rows = [["method", *_criteria_names(vectors)]]
    rows += [[v.method.value, *(_num(x, precision) for x in v.weights)] for v in vectors]
    return _csv(rows)


def weights_structured(vectors: Sequence[WeightVector], precision=DEFAULT_PRECISION) -> dict:
    names = _criteria_names(vectors)
    return {
        v.method.value: {c: _jnum(x, precision) for c, x in zip(names, v.weights)}
        for v in vectors
    }


# -- score tables ------------------------------------------------------------


def scores_plain(tables: Sequence[ScoreTable], precision=DEFAULT_PRECISION) -> str:
    """Alternatives as rows; per weighting method a score and a rank column."""
    score_label = {"Probability": "P_i", "TOPSIS": "C_i", "RAM": "RI_i"}
    title = f"{tables[0].ranking_method.value} scores and ranks\n"
    top = ["Alt."]
    sub = [""]
    for t in tables:
        top += [t.weighting_method.value, ""]
        sub += [score_label[t.ranking_method.value], "rank"]
    rows = [top, sub]
    for i, alt in enumerate(tables[0].alternatives):
        row = [alt]
        for t in tables:
            row += [_num(t.scores[i], precision), str(t.display_ranks[i])]
        rows.append(row)
    return title + _align(rows)


def scores_csv(tables: Sequence[ScoreTable], precision=DEFAULT_PRECISION) -> str:
    rows = [["ranking", "weighting", "alternative", "score", "rank"]]
    for t in tables:
        for alt, s, r in zip(t.alternatives, t.scores, t.display_ranks):
            rows.append([t.ranking_method.value, t.weighting_method.value, alt, _num(s, precision), int(r)])
    return _csv(rows)


def _table_structured(t: ScoreTable, precision) -> dict:
    return {
        alt: {"score": _jnum(s, precision), "rank": int(r)}
        for alt, s, r in zip(t.alternatives, t.scores, t.display_ranks)
    }


def scores_structured(tables: Sequence[ScoreTable], precision=DEFAULT_PRECISION) -> dict:
    out: dict = {}
    for t in tables:
        out.setdefault(t.ranking_method.value, {})[t.weighting_method.value] = _table_structured(
            t, precision
        )
    return out


# -- study -------------------------------------------------------------------


def _spearman_plain(s: SpearmanMatrix, precision) -> str:
    labels = [w.value for w in s.labels]
    rows = [["Method", *labels[1:]]]
    for i, lab in enumerate(labels[:-1]):
        row = [lab] + [""] * i
        row += [_num(s.matrix[i, j], precision) for j in range(i + 1, len(labels))]
        rows.append(row)
    rows.append(["Average", _num(s.average, precision)])
    return f"Spearman coefficients, {s.ranking_method.value}\n" + _align(rows)


def study_plain(report: StudyReport, precision=DEFAULT_PRECISION) -> str:
    parts = ["Criteria weights\n" + weights_plain(list(report.weights.values()), precision)]
    for r in report.rankings:
        parts.append(scores_plain([report.table(w, r) for w in report.weightings], precision))
    rows = [["Method", *(w.value for w in report.weightings)]]
    for i, r in enumerate(report.rankings):
        rows.append([r.value, *(_num(x, precision) for x in report.r_scores[i])])
    parts.append("R_score (max/min score)\n" + _align(rows))
    for r in report.rankings:
        if r in report.spearman_matrices:
            parts.append(_spearman_plain(report.spearman_matrices[r], precision))
    return "\n".join(parts)


def study_csv(report: StudyReport, precision=DEFAULT_PRECISION) -> str:
    """Tidy records: section, ranking, weighting, item, value."""
    rows = [["section", "ranking", "weighting", "item", "value"]]
    for w, vec in report.weights.items():
        for c, x in zip(report.matrix.criterion_names, vec.weights):
            rows.append(["weight", "", w.value, c, _num(x, precision)])
    for r in report.rankings:
        for w in report.weightings:
            t = report.table(w, r)
            for alt, s, k in zip(t.alternatives, t.scores, t.display_ranks):
                rows.append(["score", r.value, w.value, alt, _num(s, precision)])
                rows.append(["rank", r.value, w.value, alt, int(k)])
    for i, r in enumerate(report.rankings):
        for j, w in enumerate(report.weightings):
            rows.append(["r_score", r.value, w.value, "", _num(report.r_scores[i, j], precision)])
    for r, s in report.spearman_matrices.items():
        for a, b, v in s.upper_triangle():
            rows.append(["spearman", r.value, a.value, b.value, _num(v, precision)])
        rows.append(["spearman_average", r.value, "", "", _num(s.average, precision)])
    return _csv(rows)


def study_structured(report: StudyReport, precision=DEFAULT_PRECISION) -> dict:
    rankings = {}
    for i, r in enumerate(report.rankings):
        node: dict = {"weightings": {}}
        for j, w in enumerate(report.weightings):
            node["weightings"][w.value] = {
                "r_score": _jnum(report.r_scores[i, j], precision),
                "alternatives": _table_structured(report.table(w, r), precision),
            }
        s = report.spearman_matrices.get(r)
        if s is not None:
            node["spearman"] = {
                "pairs": [
                    {"a": a.value, "b": b.value, "value": _jnum(v, precision)}
                    for a, b, v in s.upper_triangle()
                ],
                "average": _jnum(s.average, precision),
            }
        rankings[r.value] = node
    return {
        "alternatives": list(report.matrix.alternatives),
        "criteria": [
            {"name": c.name, "direction": c.direction.value} for c in report.matrix.criteria
        ],
        "weights": weights_structured(list(report.weights.values()), precision),
        "rankings": rankings,
    }


def matrix_structured(matrix: DecisionMatrix) -> dict:
    return {
        "criteria": [{"name": c.name, "direction": c.direction.value} for c in matrix.criteria],
        "alternatives": {
            a: dict(zip(matrix.criterion_names, map(float, row)))
            for a, row in zip(matrix.alternatives, matrix.values)
        },
    }


def matrix_plain(matrix: DecisionMatrix, precision=DEFAULT_PRECISION) -> str:
    rows = [["Alt.", *matrix.criterion_names], ["", *(d.short for d in matrix.directions)]]
    for a, row in zip(matrix.alternatives, matrix.values):
        rows.append([a, *(_num(x, precision) for x in row)])
    return _align(rows)


# -- dispatch ----------------------------------------------------------------


def render(obj, fmt: str | ReportFormat = ReportFormat.PLAIN, precision: int | None = DEFAULT_PRECISION) -> str:
    """Render a matrix, weight vector(s), score table(s) or study report."""
    fmt = ReportFormat(fmt)
    if isinstance(obj, DecisionMatrix):
        if fmt is ReportFormat.CSV:
            return format_matrix(obj)
        if fmt is ReportFormat.STRUCTURED:
            return json.dumps(matrix_structured(obj), indent=2) + "\n"
        return matrix_plain(obj, precision)
    if isinstance(obj, StudyReport):
        fn = {ReportFormat.PLAIN: study_plain, ReportFormat.CSV: study_csv}.get(fmt)
        if fn:
            return fn(obj, precision)
        return json.dumps(study_structured(obj, precision), indent=2) + "\n"

    first = obj if not isinstance(obj, (list, tuple)) else (obj[0] if obj else None)
    if isinstance(first, WeightVector):
        items = _as_list(obj, WeightVector)
        if fmt is ReportFormat.PLAIN:
            return weights_plain(items, precision)
        if fmt is ReportFormat.CSV:
            return weights_csv(items, precision)
        return json.dumps(weights_structured(items, precision), indent=2) + "\n"
    if isinstance(first, ScoreTable):
        items = _as_list(obj, ScoreTable)
        if fmt is ReportFormat.PLAIN:
            if len({t.ranking_method for t in items}) > 1:
                return "\n".join(
                    scores_plain([t for t in items if t.ranking_method is r], precision)
                    for r in dict.fromkeys(t.ranking_method for t in items)
                )
            return scores_plain(items, precision)
        if fmt is ReportFormat.CSV:
            return scores_csv(items, precision)
        return json.dumps(scores_structured(items, precision), indent=2) + "\n"
    raise InputError(f"cannot render object of type {type(obj).__name__}")


def emit_report(obj, fmt: str | ReportFormat = ReportFormat.PLAIN, destination=None,
                precision: int | None = DEFAULT_PRECISION) -> None:
    """Render ``obj`` and write it to a path, a stream or stdout.

    Raises ``WriteFailure`` if the destination cannot be written.
    """
    write_text(render(obj, fmt, precision), destination)
