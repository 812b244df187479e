"""Squarefree separator polynomials, updated one point at a time from the trie.

The separator of point ``i`` is kept as a product of linear factors
``scale * (x_c - root)``.  When point ``N`` arrives:

* its own separator gets one factor per sibling of each node on its trie path,
  vanishing on the sibling subtree;
* if its path forks at level ``j`` (node label ``{N}``), every point in a
  sibling subtree at that level gets one extra factor vanishing at ``P_N``.

Nothing else changes, so each update touches at most ``N`` separators and adds
at most one factor to each earlier one.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from . import poly
from .errors import DimensionMismatch, InconsistentState, SamePoint
from .scalar import RATIONALS, FieldSpec
from .trie import PointTrie


@dataclass(frozen=True)
class LinearFactor:
    """``scale * (x_variable - root)``; ``variable`` is 1-based."""

    variable: int
    root: object
    scale: object

    def __post_init__(self):
        if self.scale == 0:
            raise InconsistentState("linear factor with zero scale")

    def evaluate(self, point: Sequence, field: FieldSpec):
        return field.mul(self.scale, field.sub(point[self.variable - 1], self.root))

    def to_json(self, field: FieldSpec) -> dict:
        return {"var": self.variable, "root": field.render(self.root),
                "scale": field.render(self.scale)}

    def render(self, field: FieldSpec) -> str:
        x = f"x{self.variable}"
        lin = x if self.root == 0 else f"({x} - {field.render(self.root)})"
        if field.p is None and self.root < 0:
            lin = f"({x} + {field.render(-self.root)})"
        if self.scale == field.one:
            return lin
        if self.scale == field.neg(field.one):
            return "-" + lin
        return f"{field.render(self.scale)}*{lin}"


def lagrange_factor(i: int, j: int, points: Sequence[Sequence], field: FieldSpec = RATIONALS,
                    witness: Sequence[Sequence[int]] | None = None) -> LinearFactor:
    """Factor in the first differing coordinate of ``P_i``, ``P_j`` that is 1 at
    ``P_i`` and 0 at ``P_j`` (indices 1-based)."""
    if i == j:
        raise SamePoint(f"factor needs two distinct indices, got {i} twice")
    Pi, Pj = points[i - 1], points[j - 1]
    if witness is not None:
        c = witness[i - 1][j - 1]
    else:
        c = next((h for h in range(1, len(Pi) + 1) if Pi[h - 1] != Pj[h - 1]), 0)
    if c == 0:
        raise SamePoint(f"points {i} and {j} coincide")
    return _factor(Pi, Pj, c, field)


def _factor(Pi, Pj, c: int, field: FieldSpec) -> LinearFactor:
    ai, aj = field.coerce(Pi[c - 1]), field.coerce(Pj[c - 1])
    d = field.sub(ai, aj)
    if d == 0:
        raise InconsistentState(f"coordinate {c} does not separate the two points")
    return LinearFactor(c, aj, field.inv(d))


@dataclass(frozen=True)
class Separator:
    owner: int
    factors: tuple = ()
    field: FieldSpec = dc_field(default=RATIONALS, compare=False)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def times(self, f: LinearFactor) -> "Separator":
        key = (f.variable, f.root)
        if any((g.variable, g.root) == key for g in self.factors):
            raise InconsistentState(f"separator {self.owner} would get a repeated factor")
        return Separator(self.owner, self.factors + (f,), self.field)

    def evaluate(self, point: Sequence):
        v = self.field.one
        for f in self.factors:
            v = self.field.mul(v, f.evaluate(point, self.field))
            if v == 0:
                break
        return v

    def expand(self, n: int) -> dict:
        p = poly.constant(1, n, self.field)
        for f in self.factors:
            p = poly.mul_linear(p, f.variable, f.root, f.scale, self.field)
        return p

    def is_squarefree(self) -> bool:
        keys = [(f.variable, f.root) for f in self.factors]
        return len(keys) == len(set(keys))

    def leading_coefficient(self):
        c = self.field.one
        for f in self.factors:
            c = self.field.mul(c, f.scale)
        return c

    def render(self) -> str:
        """Constant times monic linear factors, e.g. ``-(x1 - 1)*(x2 - 1)``."""
        field = self.field
        if not self.factors:
            return "1"
        body = "*".join(LinearFactor(f.variable, f.root, field.one).render(field)
                        for f in self.factors)
        c = self.leading_coefficient()
        if c == field.one:
            return body
        if c == field.neg(field.one):
            return "-" + body
        return f"{field.render(c)}*{body}"


def evaluate(q, point: Sequence, field: FieldSpec | None = None, n: int | None = None):
    """Evaluate a :class:`Separator` (factor by factor) or a sparse polynomial."""
    if isinstance(q, Separator):
        for f in q.factors:
            if f.variable > len(point):
                raise DimensionMismatch(f"factor in x{f.variable}, point has {len(point)} coordinates")
        return q.evaluate(point)
    return poly.evaluate(q, point, field or RATIONALS)


def expand(q: Separator, n: int) -> dict:
    return q.expand(n)


class SeparatorFamily:
    """Separators of the points inserted so far, kept in step with a trie."""

    def __init__(self, n: int, field: FieldSpec = RATIONALS):
        self.n = n
        self.field = field
        self.separators: list[Separator] = []
        self.ops = 0

    def __len__(self):
        return len(self.separators)

    def __getitem__(self, i: int) -> Separator:
        """1-based access."""
        return self.separators[i - 1]

    def add_point(self, trie: PointTrie, points: Sequence[Sequence]) -> "SeparatorFamily":
        """Account for the last point of ``points``; ``trie`` must already hold it."""
        N = len(trie)
        if N != len(self.separators) + 1 or len(points) < N:
            raise InconsistentState("separator family and trie are out of step")
        field = self.field
        P = points[N - 1]
        Q = Separator(N, (), field)
        path = trie.paths[N]
        for j in range(1, self.n + 1):
            v = path[j]
            sibs = [w for w in v.parent.children if w is not v]
            for w in sibs:
                # any member shares coordinate j with the whole sibling subtree
                i_bar = w.label[0]
                Q = Q.times(_factor(P, points[i_bar - 1], j, field))
                self.ops += 1
            if len(v.label) == 1 and v.label[0] == N:
                for w in sibs:
                    for i in w.label:
                        self.separators[i - 1] = self.separators[i - 1].times(
                            _factor(points[i - 1], P, j, field))
                        self.ops += 1
                break
        self.separators.append(Q)
        return self

    def snapshot(self) -> tuple[Separator, ...]:
        return tuple(self.separators)

    def kronecker_defects(self, points: Sequence[Sequence]) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` where ``Q_i(P_j)`` differs from the Kronecker delta."""
        bad = []
        one = self.field.one
        for i, q in enumerate(self.separators, start=1):
            for j, P in enumerate(points, start=1):
                v = q.evaluate(P)
                if v != (one if i == j else 0):
                    bad.append((i, j))
        return bad

    def to_json(self) -> list[dict]:
        out = []
        for q in self.separators:
            out.append({
                "point": q.owner,
                "factored": [f.to_json(self.field) for f in q.factors],
                "text": q.render(),
                "expanded": poly.to_json(q.expand(self.n), self.field),
            })
        return out


def separators_add_point(family: SeparatorFamily, trie: PointTrie,
                         points: Sequence[Sequence]) -> SeparatorFamily:
    return family.add_point(trie, points)


def separator_family(points: Iterable[Sequence], field: FieldSpec = RATIONALS) -> SeparatorFamily:
    pts = [tuple(field.coerce(a) for a in p) for p in points]
    n = len(pts[0])
    trie = PointTrie(n)
    fam = SeparatorFamily(n, field)
    for k, P in enumerate(pts, start=1):
        trie.extend(P)
        fam.add_point(trie, pts)
    return fam
