"""Bar Codes stored as nested lists.

For ``n`` variables the Bar Code is a list of ``n``-bars; an ``i``-bar is a
list of the ``(i-1)``-bars lying over it, and a 1-bar is a list of point
indices.  With ``n = 3`` the order ideal ``{1, x1, x2, x3}`` reads::

    [[[[1], [3]], [[2]]], [[[4]]]]

A bar is addressed by its position path ``(b_n, ..., b_i)``; for a 1-bar the
full path is its e-list, i.e. the exponent vector of its term written from
``x_n`` down to ``x_1``.
"""
from __future__ import annotations

import json
from typing import Iterator, Sequence

from .errors import InvalidPosition, NotAdmissible
from .monomials import Term, lex_key, lex_sorted, project_high

EList = tuple


def term_of_elist(e: Sequence[int]) -> Term:
    """``(b_n, ..., b_1)`` -> exponent tuple ``(b_1, ..., b_n)``."""
    return tuple(reversed(e))


def elist_of_term(t: Term) -> EList:
    return tuple(reversed(t))


def flatten(bars) -> list[int]:
    out: list[int] = []
    stack = [iter(bars)]
    while stack:
        for item in stack[-1]:
            if isinstance(item, list):
                stack.append(iter(item))
                break
            out.append(item)
        else:
            stack.pop()
    return out


class BarCode:
    def __init__(self, n: int, bars: list | None = None):
        self.n = n
        self.bars: list = bars if bars is not None else []
        self.ops = 0

    # construction -----------------------------------------------------------
    @classmethod
    def single(cls, n: int, index: int = 1) -> "BarCode":
        bc = cls(n)
        bc.bars.append(_column(n, index))
        return bc

    @classmethod
    def from_terms(cls, terms: Sequence[Term], labels: Sequence[int] | None = None) -> "BarCode":
        """Bar Code diagram of a finite set of distinct terms.

        1-bars are labeled ``1..m`` in lex order unless ``labels`` (aligned with
        ``terms``) is given.
        """
        if not terms:
            raise ValueError("empty term set")
        n = len(terms[0])
        if labels is None:
            pairs = list(zip(lex_sorted(terms), range(1, len(terms) + 1)))
        else:
            pairs = sorted(zip(terms, labels), key=lambda p: lex_key(p[0]))
        if len({t for t, _ in pairs}) != len(pairs):
            raise ValueError("repeated term")
        bc = cls(n)
        for t, lab in pairs:
            # the row-i bar of t is determined by the projection on x_i..x_n
            node = bc.bars
            for i in range(n, 1, -1):
                key = project_high(t, i)
                if not node or _proj_of(node[-1]) != key:
                    node.append(_Tagged([], key))
                node = node[-1]
            node.append([lab])
        bc.bars = _untag(bc.bars)
        return bc

    @classmethod
    def from_json(cls, data, n: int | None = None) -> "BarCode":
        if isinstance(data, str):
            data = json.loads(data)
        if n is None:
            n, probe = 0, data
            while isinstance(probe, list) and probe and isinstance(probe[0], list):
                n += 1
                probe = probe[0]
        bc = cls(n, data)
        bc.validate()
        return bc

    # addressing -------------------------------------------------------------
    def bar(self, prefix: Sequence[int]):
        """The bar at a position path, or ``None`` when it does not exist."""
        node = self.bars
        for b in prefix:
            self.ops += 1
            if b < 0 or b >= len(node):
                return None
            node = node[b]
        return node

    def next_bar(self, s: int, l: int, table) -> tuple | None:
        """Handle of the ``s``-bar right after the one under ``t_l``, if it exists.

        ``table`` is anything indexable as ``table[l]`` -> e-list row (1-based l).
        """
        row = table[l]
        k = self.n - s  # position of the x_s entry in the e-list
        handle = tuple(row[:k]) + (row[k] + 1,)
        return handle if self.bar(handle) is not None else None

    def points_over(self, handle: Sequence[int]) -> list[int]:
        node = self.bar(handle)
        if node is None:
            raise InvalidPosition(f"no bar at {tuple(handle)}")
        out = flatten(node) if isinstance(node[0], list) else list(node)
        self.ops += len(out)
        return out

    def insert_new_block(self, handle: Sequence[int], index: int) -> None:
        """Open a new ``s``-bar (with its 1..s-1 bars) at ``handle``.

        ``handle`` has length ``n - s + 1`` and must point just past the last
        ``s``-bar under its ``(s+1)``-bar (or just past the last ``n``-bar).
        """
        handle = tuple(handle)
        if not 1 <= len(handle) <= self.n:
            raise InvalidPosition(f"bad handle length {len(handle)}")
        parent = self.bar(handle[:-1])
        if parent is None or (handle[:-1] and not isinstance(parent[0], list)):
            raise InvalidPosition(f"no parent bar at {handle[:-1]}")
        if handle[-1] != len(parent):
            raise InvalidPosition(
                f"position {handle} is not right after the last bar ({len(parent)} present)")
        s = self.n - len(handle) + 1
        parent.append(_column(s, index))
        self.ops += s

    def remove_index(self, index: int) -> bool:
        """Delete point ``index`` from its 1-bar, pruning bars left empty."""
        def walk(node, depth):
            for j, child in enumerate(node):
                if depth == 1:
                    if index in child:
                        child.remove(index)
                        if not child:
                            del node[j]
                        return True
                elif walk(child, depth - 1):
                    if not child:
                        del node[j]
                    return True
            return False
        return walk(self.bars, self.n)

    # reading ----------------------------------------------------------------
    def one_bars(self) -> Iterator[tuple[EList, list[int]]]:
        """Yield ``(e-list, label)`` for every 1-bar, left to right."""
        def walk(node, depth, prefix):
            for j, child in enumerate(node):
                if depth == 1:
                    yield prefix + (j,), child
                else:
                    yield from walk(child, depth - 1, prefix + (j,))
        yield from walk(self.bars, self.n, ())

    def elists(self) -> list[EList]:
        return [e for e, _ in self.one_bars()]

    def reconstruct_terms(self) -> list[Term]:
        """Terms labeling the 1-bars (BbC1/BbC2), left to right = lex increasing."""
        return [term_of_elist(e) for e in self.elists()]

    def labels(self) -> dict[int, Term]:
        """Point index -> term of its 1-bar."""
        out = {}
        for e, lab in self.one_bars():
            for i in lab:
                out[i] = term_of_elist(e)
        return out

    def is_admissible(self) -> bool:
        es = set(self.elists())
        for e in es:
            for k, b in enumerate(e):
                if b and e[:k] + (b - 1,) + e[k + 1:] not in es:
                    return False
        return True

    def star_set(self) -> list[Term]:
        """Star set read off the diagram, lex sorted.

        Each ``i``-bar that is the last one over its ``(i+1)``-bar (for ``i = n``:
        the last ``n``-bar) contributes ``x_i * pi^i(t)`` for any term ``t`` over it.
        """
        if not self.is_admissible():
            raise NotAdmissible("star set requires an admissible Bar Code")
        n = self.n
        out = []

        def walk(node, i, prefix):
            # node: list of i-bars
            for j, bar in enumerate(node):
                path = prefix + (j,)
                if j == len(node) - 1:
                    # any term over this bar agrees with path on x_i..x_n
                    t = list(term_of_elist(path + (0,) * (i - 1)))
                    t[i - 1] += 1
                    out.append(tuple(t))
                if i > 1:
                    walk(bar, i - 1, path)

        walk(self.bars, n, ())
        return lex_sorted(out)

    # validation / rendering -------------------------------------------------
    def validate(self) -> None:
        """Check the nested structure: uniform depth ``n``, no empty bars,
        1-bars are non-empty lists of ints."""
        def check(node, depth, where):
            if not isinstance(node, list) or not node:
                raise InvalidPosition(f"empty or malformed bar at {where}")
            if depth == 0:
                if not all(isinstance(i, int) and not isinstance(i, bool) for i in node):
                    raise InvalidPosition(f"1-bar at {where} must hold point indices")
                return
            for j, child in enumerate(node):
                check(child, depth - 1, where + (j,))
        if self.bars:
            check(self.bars, self.n, ())

    def to_json(self) -> list:
        return json.loads(json.dumps(self.bars))

    def __eq__(self, other):
        return isinstance(other, BarCode) and self.n == other.n and self.bars == other.bars

    def render_text(self, term_names: bool = True) -> str:
        """Row-of-bars picture: row 1 on top, one column per 1-bar."""
        from .monomials import render_term
        cols = list(self.one_bars())
        if not cols:
            return ""
        names = [render_term(term_of_elist(e)) if term_names else ",".join(map(str, lab))
                 for e, lab in cols]
        width = max(len(s) for s in names) + 2
        lines = ["".join(s.center(width) for s in names)]
        for i in range(1, self.n + 1):
            row, j = [], 0
            while j < len(cols):
                k = j
                key = cols[j][0][: self.n - i + 1]
                while k < len(cols) and cols[k][0][: self.n - i + 1] == key:
                    k += 1
                span = (k - j) * width
                row.append(" " + "-" * (span - 2) + " ")
                j = k
            lines.append("".join(row) + f"  {i}")
        return "\n".join(lines)

    def render_svg(self, unit: int = 40) -> str:
        from .monomials import render_term
        cols = list(self.one_bars())
        w = max(1, len(cols)) * unit + 20
        h = (self.n + 1) * unit
        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">']
        for c, (e, _) in enumerate(cols):
            parts.append(f'<text x="{10 + c * unit + unit // 2}" y="{unit // 2}" '
                         f'text-anchor="middle" font-size="12">{render_term(term_of_elist(e))}</text>')
        for i in range(1, self.n + 1):
            y = i * unit
            j = 0
            while j < len(cols):
                k = j
                key = cols[j][0][: self.n - i + 1]
                while k < len(cols) and cols[k][0][: self.n - i + 1] == key:
                    k += 1
                x0, x1 = 10 + j * unit + 4, 10 + k * unit - 4
                parts.append(f'<line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" '
                             f'stroke="black" stroke-width="3"/>')
                j = k
        parts.append("</svg>")
        return "\n".join(parts)


def _column(s: int, index: int) -> list:
    bar: list = [index]
    for _ in range(s - 1):
        bar = [bar]
    return bar


class _Tagged(list):
    """Temporary list carrying the projection key of the bar it represents."""

    def __init__(self, items, key):
        super().__init__(items)
        self.key = key


def _proj_of(node):
    return getattr(node, "key", None)


def _untag(node):
    if isinstance(node, list):
        return [_untag(c) for c in node]
    return node
