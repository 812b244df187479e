from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from iterlex import poly

from conftest import QQ

terms = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(terms, st.integers(-5, 5).filter(bool), max_size=5).map(
    lambda d: {t: QQ.coerce(c) for t, c in d.items()})
points = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


def test_render_and_leading_term():
    f = {(0, 2): 1, (0, 1): -3, (1, 0): -2, (0, 0): 2}
    assert poly.render(f, QQ) == "x2^2 - 3*x2 - 2*x1 + 2"
    assert poly.leading_term(f) == (0, 2)
    assert poly.render({}, QQ) == "0"


@given(polys, polys, points)
def test_ring_operations_commute_with_evaluation(f, g, P):
    ev = lambda h: poly.evaluate(h, P, QQ)  # noqa: E731
    assert ev(poly.add(f, g, QQ)) == ev(f) + ev(g)
    assert ev(poly.sub(f, g, QQ)) == ev(f) - ev(g)
    assert ev(poly.scale(f, 3, QQ)) == 3 * ev(f)
    assert ev(poly.mul_linear(f, 2, 1, -2, QQ)) == ev(f) * -2 * (P[1] - 1)


@given(polys)
def test_json_roundtrip(f):
    assert poly.from_json(poly.to_json(f, QQ), QQ) == f
