from __future__ import annotations

import json

import pytest

from iterlex.errors import DimensionMismatch, DuplicatePoint, ParseError
from iterlex.io import dumps, load_points, parse_csv_points, parse_json_points
from iterlex.scalar import FieldSpec

from conftest import FIXTURES, QQ


def test_csv_and_json_fixtures_agree():
    a = load_points(FIXTURES / "three_points.json")
    b = load_points(FIXTURES / "three_points.csv")
    assert a.points == b.points and a.n == b.n == 2


def test_bare_list_and_field_override():
    ps = parse_json_points('[["1/2", 3], ["8", "-1"]]', FieldSpec.prime(7))
    assert ps.points == [(4, 3), (1, 6)]
    assert parse_json_points('{"points": [[1]]}').field == QQ


@pytest.mark.parametrize("text, exc, fragment", [
    ('{"points": []}', ParseError, "at least one point required"),
    ('{"points": [[1, 2], [1]]}', DimensionMismatch, "point 2"),
    ('{"points": [[1, 2], [1, 2]]}', DuplicatePoint, "point 2"),
    ('{"points": [[1, "x"]]}', ParseError, "coordinate 2"),
    ('{"points": [[true]]}', ParseError, "point 1"),
    ('[1, 2', ParseError, "invalid JSON"),
    ('{"n": "2", "points": [[1, 2]]}', ParseError, '"n"'),
])
def test_json_errors(text, exc, fragment):
    with pytest.raises(exc, match=fragment):
        parse_json_points(text)


@pytest.mark.parametrize("text", ["", "a,b\n1,2\n", "x2,x1\n1,2\n"])
def test_csv_errors(text):
    with pytest.raises(ParseError):
        parse_csv_points(text)


def test_dumps_is_canonical():
    s = dumps({"b": 1, "a": [1, 2]})
    assert s.endswith("\n")
    assert json.loads(s) == {"a": [1, 2], "b": 1}
    assert s.index('"a"') < s.index('"b"')
