"""Iterative computation of the lex escalier of an ideal of points.

Each new point is threaded through three structures: the point trie (shared
coordinate prefixes), the Bar Code (positions of the terms found so far) and
the e-list table ``M``.  The new point's term is built one variable at a time
from ``x_n`` down, without touching any earlier row of ``M``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .barcode import BarCode, term_of_elist
from .errors import DimensionMismatch, InconsistentState, InternalError
from .monomials import Term
from .scalar import RATIONALS, FieldSpec
from .trie import PointTrie


class EscalierTable:
    """The ``N x n`` e-list table, columns ordered ``[x_n, ..., x_1]``.

    Rows are 1-based.  Every cell may be assigned exactly once; ``writes``
    counts assignments.
    """

    def __init__(self, n: int):
        self.n = n
        self.rows: list[list[int]] = []
        self.writes = 0

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i: int) -> list[int]:
        return self.rows[i - 1]

    def new_row(self) -> int:
        self.rows.append([None] * self.n)
        return len(self.rows)

    def write(self, i: int, col: int, value: int) -> None:
        """Assign ``M[i][col]`` (both 1-based; column 1 is x_n)."""
        row = self.rows[i - 1]
        if row[col - 1] is not None:
            raise InternalError(f"M[{i}][{col}] written twice")
        row[col - 1] = value
        self.writes += 1

    def update(self, s: int, l: int, N: int) -> None:
        """Zero the columns of ``x_1..x_{s-1}`` and set the ``x_s`` column to
        ``M[l]`` plus one."""
        n = self.n
        for i in range(1, s):
            self.write(N, n - i + 1, 0)
        self.write(N, n - s + 1, self[l][n - s] + 1)

    def term(self, i: int) -> Term:
        return term_of_elist(self[i])

    def terms(self) -> list[Term]:
        return [term_of_elist(r) for r in self.rows]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def update_row(M: EscalierTable, s: int, l: int, N: int) -> EscalierTable:
    M.update(s, l, N)
    return M


@dataclass
class StepTrace:
    """What happened while placing one point."""

    index: int
    fork_level: int
    queries: list[tuple[int, int]] = dc_field(default_factory=list)  # (sigma-value, antecedent)
    sets: list[list[int]] = dc_field(default_factory=list)  # point sets read off next bars
    case_a_level: int = 0


class GameState:
    """Trie, Bar Code and e-list table for an ordered set of distinct points."""

    def __init__(self, n: int, field: FieldSpec = RATIONALS):
        if n < 1:
            raise ValueError("dimension must be positive")
        self.n = n
        self.field = field
        self.trie = PointTrie(n)
        self.barcode = BarCode(n)
        self.table = EscalierTable(n)
        self.points: list[tuple] = []
        self.sigma_log: list[tuple[int, int] | None] = []  # (s, l) with t_N = x_s t_l
        self.traces: list[StepTrace] = []

    def __len__(self):
        return len(self.points)

    @property
    def terms(self) -> list[Term]:
        """Correspondence: ``terms[i-1]`` is the term of point ``i``."""
        return self.table.terms()

    def escalier(self) -> list[Term]:
        return self.barcode.reconstruct_terms()

    def op_count(self) -> int:
        return self.trie.ops + self.barcode.ops

    def add_point(self, point: Sequence) -> Term:
        """Place one more point and return its term.

        On any failure after the trie accepted the point, the step is undone.
        """
        before = len(self.trie)
        try:
            return self._add_point(point)
        except Exception:
            if len(self.trie) > before:
                self.undo_last()
            raise

    def undo_last(self) -> None:
        """Remove the most recently added point from every structure."""
        N = len(self.trie)
        self.trie.remove_last()
        if len(self.points) == N:
            self.points.pop()
        if len(self.table) == N:
            row = self.table.rows.pop()
            self.table.writes -= sum(x is not None for x in row)
        if N == 1:
            self.barcode = BarCode(self.n)
        else:
            self.barcode.remove_index(N)
        if len(self.sigma_log) == N:
            self.sigma_log.pop()
        if len(self.traces) == N:
            self.traces.pop()

    def _add_point(self, point: Sequence) -> Term:
        n = self.n
        if len(point) != n:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {n}")
        point = tuple(self.field.coerce(a) for a in point)
        f, v = self.trie.extend(point)
        N = len(self.trie)
        self.points.append(point)
        M = self.table
        M.new_row()
        trace = StepTrace(N, f)
        self.traces.append(trace)
        if N == 1:
            for j in range(1, n + 1):
                M.write(1, j, 0)
            self.barcode = BarCode.single(n, 1)
            self.sigma_log.append(None)
            return M.term(1)

        for j in range(1, n - f + 1):
            M.write(N, j, 0)
        S = _AllBefore(N)
        s = f
        last = None
        while s > 0:
            if f == s:
                l = self.trie.sigma_antecedent(v, S)
                trace.queries.append((s, l))
                handle = self.barcode.next_bar(s, l, M)
                if handle is None:
                    row = M[l]
                    k = n - s
                    self.barcode.insert_new_block(tuple(row[:k]) + (row[k] + 1,), N)
                    M.update(s, l, N)
                    trace.case_a_level = s
                    last = (s, l)
                    s = 0
                else:
                    M.write(N, n - s + 1, M[l][n - s] + 1)
                    pts = self.barcode.points_over(handle)
                    trace.sets.append(pts)
                    S = set(pts)
                    s -= 1
                    v = v.parent
                    f = self.trie.fork(s, v, S)
            else:
                M.write(N, n - s + 1, 0)
                s -= 1
                v = v.parent
                f = self.trie.fork(s, v, S)
        if last is None:
            raise InternalError(f"point {N} was never placed in the Bar Code")
        # t_N / x_s sits on the first 1-bar of the antecedent's s-bar; it is
        # not t_l itself when t_l has positive exponents below x_s
        s, l = last
        k = n - s
        base = self.barcode.bar(tuple(M[l][:k + 1]) + (0,) * (s - 1))
        if base is None:
            raise InconsistentState(f"no 1-bar below x_{s} * t_{N} / x_{s}")
        l_div = base[0]
        expect = list(M[l_div])
        expect[k] += 1
        if expect != M[N]:
            raise InconsistentState(f"t_{N} is not x_{s} * t_{l_div}")
        self.sigma_log.append((s, l_div))
        return M.term(N)

    def extend(self, points: Iterable[Sequence]) -> "GameState":
        for p in points:
            self.add_point(p)
        return self


class _AllBefore:
    """The index set ``{1, ..., N-1}`` without materializing it."""

    __slots__ = ("N",)
    everything_before = True

    def __init__(self, N: int):
        self.N = N

    def __contains__(self, i):
        return 0 < i < self.N


def new_game(n: int, field: FieldSpec = RATIONALS) -> GameState:
    return GameState(n, field)


def add_point(state: GameState, point: Sequence) -> tuple[GameState, Term]:
    t = state.add_point(point)
    return state, t


def full_run(points: Sequence[Sequence], field: FieldSpec = RATIONALS,
             n: int | None = None) -> GameState:
    points = list(points)
    if n is None:
        if not points:
            raise ValueError("need n or at least one point")
        n = len(points[0])
    return GameState(n, field).extend(points)
