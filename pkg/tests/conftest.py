from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from iterlex.scalar import FieldSpec

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

QQ = FieldSpec.rationals()
GF = FieldSpec.prime(32003)


def load_fixture(name: str):
    return json.loads((FIXTURES / name).read_text())


def fixture_points(name: str):
    doc = load_fixture(name)
    f = FieldSpec.parse(doc["field"])
    return [tuple(f.parse_raw(a) for a in P) for P in doc["points"]]


@pytest.fixture
def eight_points():
    return fixture_points("lexgame_8points.json")


@pytest.fixture
def grs_points():
    return fixture_points("grs_13points.json")


@pytest.fixture
def three_points():
    return fixture_points("three_points.json")


@st.composite
def point_sets(draw, max_n=4, max_N=12, lo=-3, hi=3):
    """Distinct integer points in a small box, in a random order."""
    n = draw(st.integers(1, max_n))
    cap = min(max_N, (hi - lo + 1) ** n)
    coords = st.tuples(*[st.integers(lo, hi)] * n)
    pts = draw(st.lists(coords, min_size=1, max_size=cap, unique=True))
    return pts


fields = st.sampled_from([QQ, GF, FieldSpec.prime(7)])
