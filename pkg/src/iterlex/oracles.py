"""Independent reference computations used to cross-check the iterative game.

* :func:`cerlienco_mureddu` is the classical recursive correspondence, written
  literally (sigma-value by prefix search, sigma-antecedent by its defining
  maximality property, recursion on a projected point set).
* :func:`bm_escalier_oracle` finds the lex escalier by linear algebra alone:
  walk candidate terms in increasing lex order and keep those whose
  evaluation vectors are independent of the ones already kept.
"""
from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Sequence

from .errors import DuplicatePoint
from .monomials import Term, lex_key, lex_sorted
from .scalar import RATIONALS, FieldSpec


def _check_distinct(points: Sequence[tuple]) -> None:
    seen: dict = {}
    for i, p in enumerate(points, start=1):
        if p in seen:
            raise DuplicatePoint(i, seen[p])
        seen[p] = i


def cerlienco_mureddu(points: Sequence[Sequence]) -> list[Term]:
    """Exponent vector of the term assigned to each point, in point order."""
    pts = tuple(tuple(p) for p in points)
    _check_distinct(pts)
    if not pts:
        return []
    return list(_cm(pts))


@lru_cache(maxsize=None)
def _cm(pts: tuple) -> tuple:
    # extending a prefix never changes earlier answers, so recurse on the prefix
    if len(pts) == 1:
        return ((0,) * len(pts[0]),)
    head = _cm(pts[:-1])
    return head + (_cm_next(pts, head),)


def _cm_next(pts: tuple, alphas: tuple) -> Term:
    P = pts[-1]
    n = len(P)
    prev = pts[:-1]
    # sigma-value: maximal s with some earlier point sharing the first s-1 coordinates
    s = 1
    for Q in prev:
        k = 0
        while k < n and Q[k] == P[k]:
            k += 1
        s = max(s, k + 1)
    # sigma-antecedent: maximal m sharing the first s-1 coordinates whose
    # term has no x_{s+1}..x_n
    m = max(i for i, Q in enumerate(prev)
            if Q[:s - 1] == P[:s - 1] and not any(alphas[i][s:]))
    a_s = alphas[m][s - 1] + 1
    alpha = [0] * n
    alpha[s - 1] = a_s
    if s > 1:
        target = (a_s,) + (0,) * (n - s)
        Y = [Q[:s - 1] for i, Q in enumerate(prev) if alphas[i][s - 1:] == target]
        Y.append(P[:s - 1])
        low = _cm(tuple(Y))[-1]
        alpha[:s - 1] = low
    return tuple(alpha)


def bm_escalier_oracle(points: Sequence[Sequence], field: FieldSpec = RATIONALS) -> list[Term]:
    """Lex escalier of the vanishing ideal, computed by rank tests."""
    pts = [tuple(field.coerce(a) for a in p) for p in points]
    _check_distinct(pts)
    N = len(pts)
    if N == 0:
        return []
    n = len(pts[0])
    kept: set[Term] = set()
    basis: dict[int, list] = {}  # pivot column -> normalized row (echelon form)
    one = (0,) * n
    heap = [(lex_key(one), one)]
    queued = {one}
    while heap and len(kept) < N:
        _, t = heapq.heappop(heap)
        # a multiple of a discarded term can never be kept
        if any(t[:k] + (t[k] - 1,) + t[k + 1:] not in kept for k in range(n) if t[k]):
            continue
        vec = [_eval_term(t, P, field) for P in pts]
        if _reduce_and_insert(vec, basis, field):
            kept.add(t)
            for k in range(n):
                u = t[:k] + (t[k] + 1,) + t[k + 1:]
                if u not in queued:
                    queued.add(u)
                    heapq.heappush(heap, (lex_key(u), u))
    return lex_sorted(kept)


def _eval_term(t: Term, P: Sequence, field: FieldSpec):
    v = field.one
    for a, g in zip(P, t):
        for _ in range(g):
            v = field.mul(v, a)
    return v


def _reduce_and_insert(vec: list, basis: dict, field: FieldSpec) -> bool:
    vec = list(vec)
    for col, row in basis.items():
        c = vec[col]
        if c != 0:
            for j in range(len(vec)):
                if row[j] != 0:
                    vec[j] = field.sub(vec[j], field.mul(c, row[j]))
    for col, c in enumerate(vec):
        if c != 0:
            inv = field.inv(c)
            row = [field.mul(inv, x) for x in vec]
            for other in basis.values():
                d = other[col]
                if d != 0:
                    for j in range(len(row)):
                        if row[j] != 0:
                            other[j] = field.sub(other[j], field.mul(d, row[j]))
            basis[col] = row
            return True
    return False
