from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given

from iterlex import poly
from iterlex.errors import DimensionMismatch, InconsistentState, SingularPivot
from iterlex.lexgame import full_run
from iterlex.mulmat import MulState, gauss_inverse, groebner_border, mul_state, normal_form
from iterlex.monomials import parse_term

from conftest import GF, QQ, fields, load_fixture, point_sets

EXP = load_fixture("three_points.expected.json")


def as_raw(M, field=QQ):
    return [[field.parse_raw(x) for x in r] for r in M]


@pytest.fixture
def three_state(three_points):
    g = full_run(three_points)
    return mul_state(three_points, g.sigma_log, QQ)


def test_three_point_matrices(three_state):
    st = three_state
    assert st.matrix("B") == as_raw(EXP["B"])
    assert st.matrix("C") == as_raw(EXP["C"])
    for h in (1, 2):
        assert st.matrix("D", h) == as_raw(EXP["D"][h - 1])
        assert st.matrix("A", h) == as_raw(EXP["A"][h - 1])


def test_second_multiplication_matrix_last_row_by_linear_solve(three_points, three_state):
    # y^2 = c1 + c2 x + c3 y on the three points, solved directly
    B = [[1, 1, 1], [x for x, _ in three_points], [y for _, y in three_points]]
    rhs = [y * y for _, y in three_points]
    Bt_inv = gauss_inverse([list(col) for col in zip(*B)], QQ)
    c = [sum(Fraction(Bt_inv[i][j]) * rhs[j] for j in range(3)) for i in range(3)]
    assert c == [-2, 2, 3]
    assert three_state.matrix("A", 2)[2] == c
    assert three_state.normal_form({(0, 2): 1}) == c


def test_two_point_inverse():
    st = mul_state([(1, 0), (0, 1)], [None, (1, 1)], QQ)
    assert st.matrix("C") == as_raw(EXP["C_two_points"])


def test_normal_form_of_basis_terms_and_separators(three_points, three_state):
    for i, t in enumerate(three_state.terms):
        e = [0, 0, 0]
        e[i] = 1
        assert normal_form(poly.monomial(t, QQ), three_state) == e
    from iterlex.separators import separator_family
    fam = separator_family(three_points)
    C = three_state.matrix("C")
    for i in range(3):
        assert three_state.normal_form(fam[i + 1].expand(2)) == C[i]


def test_groebner_border(three_points, three_state):
    g = full_run(three_points)
    border = groebner_border(three_state, g.barcode.star_set())
    rendered = {t: poly.render(p, QQ) for t, p in border}
    assert rendered[parse_term("x1^2", 2)] == "x1^2 - x1"
    assert rendered[parse_term("x1*x2", 2)] == "x1*x2"
    assert rendered[parse_term("x2^2", 2)] == "x2^2 - 3*x2 - 2*x1 + 2"


def test_random_inverse_8x8():
    rng = random.Random(3)
    while True:
        M = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(8)] for _ in range(8)]
        try:
            inv = gauss_inverse(M, QQ)
            break
        except SingularPivot:
            continue
    prod = [[sum(M[i][k] * inv[k][j] for k in range(8)) for j in range(8)] for i in range(8)]
    assert prod == [[int(i == j) for j in range(8)] for i in range(8)]


def test_bordered_inverse_on_eight_points(eight_points):
    g = full_run(eight_points)
    st = mul_state(eight_points, g.sigma_log, QQ, check=True)
    assert st.matrix("C") == gauss_inverse(st.matrix("B"), QQ)
    assert st.residuals_vanish()


def test_singular_pivot_leaves_state_untouched():
    st = MulState(1, QQ)
    st.add_point((0,), None)
    st.add_point((1,), (1, 1))
    before = st.to_json()
    # a second x1 makes two equal rows of B
    with pytest.raises(SingularPivot):
        st.add_point((2,), (1, 1))
    assert st.to_json() == before and len(st) == 2
    st.add_point((2,), (1, 2))
    assert st.residuals_vanish()


@pytest.mark.parametrize("point, sigma", [((0, 0), (1, 5)), ((0, 0), None), ((0,), (1, 1))])
def test_bad_steps_rejected(point, sigma):
    st = MulState(2, QQ)
    st.add_point((1, 1), None)
    with pytest.raises((InconsistentState, DimensionMismatch)):
        st.add_point(point, sigma)
    assert len(st) == 1


def test_unknown_matrix_name(three_state):
    with pytest.raises(KeyError):
        three_state.matrix("Z")
    with pytest.raises(DimensionMismatch):
        three_state.matrix("A", 3)


@given(point_sets(max_N=12, max_n=3), fields)
def test_identities_on_random_inputs(pts, field):
    g = full_run(pts, field)
    st = mul_state(g.points, g.sigma_log, field, check=True)
    assert st.residuals_vanish()
    assert st.matrix("C") == gauss_inverse(st.matrix("B"), field)


@given(point_sets(max_N=10, max_n=3))
def test_history_matches_prefix_runs(pts):
    g = full_run(pts, GF)
    st = mul_state(g.points, g.sigma_log, GF, keep_history=True)
    for k in range(1, len(pts) + 1):
        pre = mul_state(g.points[:k], g.sigma_log[:k], GF)
        assert st.history[k - 1]["C"] == pre.matrix("C")
        assert st.history[k - 1]["A"] == [pre.matrix("A", h) for h in range(1, st.n + 1)]
