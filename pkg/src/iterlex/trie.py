"""Incremental point trie.

Level ``h`` nodes group the points sharing their first ``h`` coordinates; every
branch has length ``n``.  Labels are lists of 1-based point indices kept in
insertion order, so the leftmost element of a label is also its minimum.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, DuplicatePoint, NoAntecedent


class TrieNode:
    __slots__ = ("level", "ident", "edge", "label", "parent", "children", "_by_edge")

    def __init__(self, level: int, ident: int, edge=None, parent: "TrieNode | None" = None):
        self.level = level
        self.ident = ident
        self.edge = edge
        self.label: list[int] = []
        self.parent = parent
        self.children: list[TrieNode] = []
        self._by_edge: dict = {}

    @property
    def handle(self) -> tuple[int, int]:
        """Stable ``(level, creation ordinal)`` identifier."""
        return (self.level, self.ident)

    def child(self, value) -> "TrieNode | None":
        return self._by_edge.get(value)

    def siblings(self) -> list["TrieNode"]:
        if self.parent is None:
            return []
        return [c for c in self.parent.children if c is not self]

    def __repr__(self):
        return f"TrieNode(level={self.level}, label={self.label})"


class PointTrie:
    """Point trie over ``n`` coordinates.  Points are indexed from 1."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("dimension must be positive")
        self.n = n
        self.root = TrieNode(0, 0)
        self._count_per_level = [1] + [0] * n
        self.paths: list[list[TrieNode]] = [[]]  # paths[i][h] = level-h node of point i
        self.ops = 0

    def __len__(self) -> int:
        return len(self.paths) - 1

    def _new_node(self, parent: TrieNode, value, index: int) -> TrieNode:
        level = parent.level + 1
        node = TrieNode(level, self._count_per_level[level], value, parent)
        self._count_per_level[level] += 1
        node.label.append(index)
        parent.children.append(node)
        parent._by_edge[value] = node
        return node

    def find(self, point: Sequence) -> int:
        """Index of an inserted point equal to ``point``, or 0."""
        v = self.root
        for a in point:
            v = v.child(a)
            if v is None:
                return 0
        return v.label[0]

    def extend(self, point: Sequence) -> tuple[int, TrieNode]:
        """Insert the next point; return ``(fork_level, fork_node)``.

        The fork node is the first node of the new path whose label is the
        singleton of the new index.  For the very first point the fork level
        is defined as 1.
        """
        if len(point) != self.n:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.n}")
        index = len(self.paths)
        dup = self.find(point)
        if dup:
            raise DuplicatePoint(index, dup)
        v = self.root
        v.label.append(index)
        path = [v]
        fork_level, fork_node = 0, None
        for h in range(1, self.n + 1):
            self.ops += 1
            a = point[h - 1]
            w = v.child(a) if fork_node is None else None
            if w is None:
                w = self._new_node(v, a, index)
                if fork_node is None:
                    fork_level, fork_node = h, w
            else:
                w.label.append(index)
            path.append(w)
            v = w
        if index == 1:
            fork_level, fork_node = 1, path[1]
        self.paths.append(path)
        return fork_level, fork_node

    def remove_last(self) -> None:
        """Undo the latest :meth:`extend`."""
        index = len(self.paths) - 1
        if index < 1:
            raise IndexError("empty trie")
        path = self.paths.pop()
        for v in reversed(path):
            if v.label and v.label[-1] == index:
                v.label.pop()
            if not v.label and v.parent is not None:
                v.parent.children.remove(v)
                del v.parent._by_edge[v.edge]
                self._count_per_level[v.level] -= 1

    def node_of(self, index: int, level: int) -> TrieNode:
        return self.paths[index][level]

    def fork(self, s: int, v: TrieNode, S) -> int:
        """Return ``s`` when the parent of ``v`` has a label meeting ``S``, else 0."""
        w = v.parent
        if w is None:
            return 0
        for i in w.label:
            self.ops += 1
            if i in S:
                return s
        return 0

    def sigma_antecedent(self, v: TrieNode, S) -> int:
        """Largest ``min(label & S)`` over the siblings of ``v``.

        Each sibling subtree contributes its first point lying in ``S``; the
        antecedent is the latest of these.  When ``S`` holds every earlier
        point, that is the leftmost label member of the rightmost sibling, and
        only that sibling is inspected.
        """
        sibs = v.parent.children if v.parent is not None else []
        if getattr(S, "everything_before", False):
            for w in reversed(sibs):
                if w is not v:
                    self.ops += 1
                    return w.label[0]
        best = 0
        for w in sibs:
            if w is v:
                continue
            self.ops += 1
            for i in w.label:
                self.ops += 1
                if i in S:
                    if i > best:
                        best = i
                    break
        if not best:
            raise NoAntecedent(f"no sibling of node {v.handle} meets the candidate set")
        return best

    def max_branching(self) -> int:
        """Largest number of children of any node."""
        return max((len(v.children) for lev in self.levels()[:-1] for v in lev), default=0)

    def levels(self) -> list[list[TrieNode]]:
        """Nodes of each level, left to right."""
        out = [[self.root]]
        for _ in range(self.n):
            out.append([c for v in out[-1] for c in v.children])
        return out

    def witness_matrix(self) -> list[list[int]]:
        """``c[i][j]`` = first level where the paths of points ``i+1`` and ``j+1`` part."""
        N = len(self)
        C = [[0] * N for _ in range(N)]
        for i in range(1, N + 1):
            pi = self.paths[i]
            for j in range(i + 1, N + 1):
                pj = self.paths[j]
                h = 1
                while pi[h] is pj[h]:
                    h += 1
                C[i - 1][j - 1] = C[j - 1][i - 1] = h
        return C

    def dump(self, render=str) -> str:
        """Level-order text rendering: ``edge->{label}`` per node, ``|`` between parents."""
        lines = ["L0: {" + ",".join(map(str, self.root.label)) + "}"]
        prev = [self.root]
        for h in range(1, self.n + 1):
            groups, nxt = [], []
            for v in prev:
                groups.append(" ".join(
                    f"{render(c.edge)}->{{{','.join(map(str, c.label))}}}" for c in v.children))
                nxt.extend(v.children)
            lines.append(f"L{h}: " + " | ".join(groups))
            prev = nxt
        return "\n".join(lines)


def build_trie(points: Iterable[Sequence], n: int | None = None) -> PointTrie:
    points = list(points)
    trie = PointTrie(n if n is not None else len(points[0]))
    for p in points:
        trie.extend(p)
    return trie


def witness_matrix(points: Sequence[Sequence]) -> list[list[int]]:
    """Direct O(n N^2) scan of the first differing coordinate."""
    N = len(points)
    C = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            for h, (a, b) in enumerate(zip(points[i], points[j]), start=1):
                if a != b:
                    C[i][j] = C[j][i] = h
                    break
            else:
                raise DuplicatePoint(j + 1, i + 1)
    return C
