"""Reading and writing decision matrices as delimited text.

Layout::

    Alt.,C1,C2,C3          <- label cell, then criterion names
    ,max,max,min           <- direction per criterion (max/benefit/b, min/cost/c)
    A1,0.5,1.2,3.0         <- one alternative per row
    A2,...

Numbers use a dot decimal separator and no thousands separators.
"""

from __future__ import annotations

import csv
import io
import os
import re
import sys
from typing import TextIO

from .errors import InputError, ParseError, UnknownDirectionToken, WriteFailure
from .matrix import DecisionMatrix, Direction, validate_matrix

_NUMBER = re.compile(r"^[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?$")
_METADATA_LABELS = {"", "max/min", "min/max", "max", "min", "b/c", "direction"}


def _read_text(source) -> str:
    if isinstance(source, (str, os.PathLike)):
        try:
            with open(source, encoding="utf-8-sig", newline="") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror or exc}") from exc
        except UnicodeDecodeError as exc:
            raise ParseError(f"{source} is not UTF-8 text: {exc}") from exc
    text = source.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8-sig")
    return text


def parse_number(cell: str, row: int, column: int) -> float:
    token = cell.strip()
    if not _NUMBER.match(token):
        raise ParseError(f"cannot parse {cell!r} as a decimal number", row, column)
    return float(token)


def parse_matrix_text(text: str) -> DecisionMatrix:
    # row/column numbers in messages are 1-based, matching a spreadsheet view
    rows = [
        (i, [c.strip() for c in r])
        for i, r in enumerate(csv.reader(io.StringIO(text)), start=1)
        if any(c.strip() for c in r)
    ]
    if len(rows) < 2:
        raise ParseError("expected a header row, a direction row and data rows")

    header_no, header = rows[0]
    names = header[1:]
    n = len(names)
    if n == 0:
        raise ParseError("header row names no criteria", header_no)

    dir_no, dir_row = rows[1]
    if len(dir_row) != n + 1:
        raise UnknownDirectionToken(
            f"direction row has {len(dir_row) - 1} entries for {n} criteria", dir_no
        )
    directions = []
    for j, token in enumerate(dir_row[1:], start=2):
        try:
            directions.append(Direction.parse(token))
        except InputError:
            raise UnknownDirectionToken(
                f"unknown direction {token!r} (use max/benefit/b or min/cost/c)", dir_no, j
            ) from None

    labels, values = [], []
    for row_no, cells in rows[2:]:
        label = cells[0]
        if label.lower() in _METADATA_LABELS:
            raise ParseError(
                f"row with label {label!r} looks like a metadata row (e.g. a max/min "
                "summary); remove it so that only alternatives remain",
                row_no,
                1,
            )
        if len(cells) != n + 1:
            raise ParseError(
                f"expected {n} values, found {len(cells) - 1} "
                "(a comma used as decimal separator splits a cell in two)",
                row_no,
            )
        labels.append(label)
        values.append([parse_number(c, row_no, j) for j, c in enumerate(cells[1:], start=2)])

    if not labels:
        raise ParseError("no alternative rows after the direction row")
    return validate_matrix(labels, names, values, directions=directions)


def parse_matrix_file(source: str | os.PathLike | TextIO) -> DecisionMatrix:
    """Parse a path or open text stream into a validated :class:`DecisionMatrix`."""
    return parse_matrix_text(_read_text(source))


def format_matrix(matrix: DecisionMatrix, label: str = "Alt.") -> str:
    """Delimited text for ``matrix``; values use the shortest exact repr."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([label, *matrix.criterion_names])
    w.writerow(["", *("max" if d is Direction.BENEFIT else "min" for d in matrix.directions)])
    for alt, row in zip(matrix.alternatives, matrix.values):
        w.writerow([alt, *(repr(float(v)) for v in row)])
    return buf.getvalue()


def write_text(text: str, destination=None) -> None:
    """Write to a path, an open stream, or stdout when ``destination`` is None."""
    try:
        if destination is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        elif isinstance(destination, (str, os.PathLike)):
            with open(destination, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            destination.write(text)
    except OSError as exc:
        raise WriteFailure(f"cannot write output: {exc}") from exc
