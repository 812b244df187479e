from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iterlex.errors import NotOrderIdeal, ParseError
from iterlex.monomials import (divides, is_order_ideal, lex_cmp, lex_sorted, minimal_generators,
                               parse_term, project_high, project_low, render_term,
                               star_set_bruteforce)


def T(*e):
    return tuple(e)


def test_lex_compares_heaviest_variable_first():
    # x_2 > x_1^5 because x_2 is the heaviest variable present
    assert lex_cmp(T(0, 1), T(5, 0)) == 1
    assert lex_sorted([T(0, 0, 1), T(1, 0, 0), T(0, 1, 0), T(0, 0, 0)]) == \
        [T(0, 0, 0), T(1, 0, 0), T(0, 1, 0), T(0, 0, 1)]


@pytest.mark.parametrize("t, m, low, high", [
    (T(1, 2, 1), 1, T(1,), T(1, 2, 1)),
    (T(1, 2, 1), 3, T(1, 2, 1), T(1,)),
])
def test_projections(t, m, low, high):
    assert project_low(t, m) == low
    assert project_high(t, m) == high


@pytest.mark.parametrize("terms, expected", [
    ([T(0, 0, 0), T(1, 0, 0), T(0, 1, 0), T(0, 0, 1)], True),
    ([T(1, 0, 0)], False),
    ([], True),
])
def test_is_order_ideal(terms, expected):
    assert is_order_ideal(terms) is expected


@pytest.mark.parametrize("N, n, expected", [
    ([T(0, 0)], 2, [T(1, 0), T(0, 1)]),
    ([T(0, 0, 0), T(1, 0, 0), T(0, 1, 0), T(0, 0, 1)], 3,
     [T(2, 0, 0), T(1, 1, 0), T(0, 2, 0), T(1, 0, 1), T(0, 1, 1), T(0, 0, 2)]),
    ([T(0), T(1)], 1, [T(2)]),
])
def test_star_set_bruteforce(N, n, expected):
    assert star_set_bruteforce(N, n) == lex_sorted(expected)


def test_minimal_generators_requires_order_ideal():
    with pytest.raises(NotOrderIdeal):
        minimal_generators([T(1, 0)], 2)


def test_minimal_generators_of_staircase():
    N = [T(0, 0), T(1, 0), T(0, 1)]
    assert set(minimal_generators(N, 2)) == {T(2, 0), T(1, 1), T(0, 2)}


@pytest.mark.parametrize("text, t", [("1", T(0, 0, 0)), ("x1^2*x3", T(2, 0, 1)),
                                     ("[0,1,0]", T(0, 1, 0)), ("x2", T(0, 1, 0))])
def test_parse_and_render(text, t):
    assert parse_term(text, 3) == t
    assert parse_term(render_term(t), 3) == t


@pytest.mark.parametrize("text", ["x4", "y1", "[1,2]", "x1^-1"])
def test_parse_term_rejects(text):
    with pytest.raises(ParseError):
        parse_term(text, 3)


terms3 = st.tuples(*[st.integers(0, 3)] * 3)


@given(terms3, terms3, terms3)
def test_lex_is_a_term_order(a, b, c):
    s = lambda x, y: tuple(i + j for i, j in zip(x, y))  # noqa: E731
    assert lex_cmp(a, b) == -lex_cmp(b, a)
    if lex_cmp(a, b) < 0:
        assert lex_cmp(s(a, c), s(b, c)) < 0
    assert lex_cmp(T(0, 0, 0), a) <= 0
    assert divides(a, s(a, b))


@st.composite
def order_ideals(draw, n=3):
    gens = draw(st.lists(st.tuples(*[st.integers(0, 2)] * n), min_size=1, max_size=4))
    return sorted({t for g in gens for t in itertools.product(*[range(e + 1) for e in g])})


@given(order_ideals())
def test_star_set_contains_minimal_generators(N):
    n = len(N[0])
    star = set(star_set_bruteforce(N, n))
    assert set(minimal_generators(N, n)) <= star
    assert not star & set(N)
