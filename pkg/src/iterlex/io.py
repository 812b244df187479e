"""Reading point sets (JSON or CSV) and writing canonical JSON."""
from __future__ import annotations

import csv
import io as _io
import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import DimensionMismatch, DivisionByZero, DuplicatePoint, FieldMismatch, ParseError
from .scalar import RATIONALS, FieldSpec


@dataclass
class PointSet:
    field: FieldSpec
    n: int
    points: list[tuple]


def _parse_coord(text, field: FieldSpec, i: int, h: int):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"point {i}, coordinate {h}: expected a string or integer, got {text!r}")
    try:
        return field.parse_raw(str(text))
    except DivisionByZero as exc:
        raise ParseError(f"point {i}, coordinate {h}: {exc}") from None
    except (ParseError, FieldMismatch) as exc:
        raise type(exc)(f"point {i}, coordinate {h}: {exc}") from None


def _finish(rows, field: FieldSpec, n: int | None) -> PointSet:
    if not rows:
        raise ParseError("at least one point required")
    if n is None:
        n = len(rows[0])
    if n < 1:
        raise DimensionMismatch("points need at least one coordinate")
    points, seen = [], {}
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise DimensionMismatch(f"point {i} has {len(row)} coordinates, expected {n}")
        P = tuple(_parse_coord(a, field, i, h) for h, a in enumerate(row, start=1))
        if P in seen:
            raise DuplicatePoint(i, seen[P])
        seen[P] = i
        points.append(P)
    return PointSet(field, n, points)


def parse_json_points(text: str, field: FieldSpec | None = None) -> PointSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if isinstance(data, list):
        data = {"points": data}
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError('expected an object with a "points" array')
    if field is None:
        field = FieldSpec.parse(data["field"]) if "field" in data else RATIONALS
    rows = data["points"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError('"points" must be an array of coordinate arrays')
    n = data.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool)):
        raise ParseError('"n" must be an integer')
    return _finish(rows, field, n)


def parse_csv_points(text: str, field: FieldSpec | None = None) -> PointSet:
    reader = csv.reader(_io.StringIO(text))
    lines = [r for r in reader if r and any(c.strip() for c in r)]
    if not lines:
        raise ParseError("at least one point required")
    header = [c.strip() for c in lines[0]]
    if not all(re.fullmatch(r"x\d+", c) for c in header) or \
            header != [f"x{k}" for k in range(1, len(header) + 1)]:
        raise ParseError(f"CSV header must be x1..xn, got {','.join(header)}")
    rows = [[c.strip() for c in r] for r in lines[1:]]
    return _finish(rows, field or RATIONALS, len(header))


def load_points(path: str | Path | None, fmt: str | None = None, field: FieldSpec | None = None,
                text: str | None = None) -> PointSet:
    """Read a point file; the format comes from ``fmt`` or the file suffix."""
    if text is None:
        text = Path(path).read_text()
    if fmt is None:
        fmt = "csv" if path is not None and str(path).endswith(".csv") else "json"
    if fmt == "csv":
        return parse_csv_points(text, field)
    if fmt == "json":
        return parse_json_points(text, field)
    raise ParseError(f"unknown input format {fmt!r}")


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
