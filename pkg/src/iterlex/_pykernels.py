"""Dense matrix kernels on lists of lists of raw field values.

Works for every field.  Matrices are square and grow by one row and column
per point.
"""
from __future__ import annotations

from .scalar import FieldSpec


class PyDense:
    __slots__ = ("rows",)

    def __init__(self):
        self.rows: list[list] = []

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]


class PyBackend:
    """Generic kernels; values are whatever :class:`FieldSpec` hands out."""

    name = "python"

    def __init__(self, field: FieldSpec):
        self.field = field

    def new(self) -> PyDense:
        return PyDense()

    def vector(self, values) -> list:
        return list(values)

    def to_list(self, v) -> list:
        return list(v)

    def border(self, M: PyDense, col, row) -> None:
        """Append ``col`` (length N-1) as last column and ``row`` (length N) as last row."""
        for r, c in zip(M.rows, col):
            r.append(c)
        M.rows.append(list(row))

    def row(self, M: PyDense, i: int) -> list:
        return M.rows[i]

    def entry(self, M: PyDense, i: int, j: int):
        return M.rows[i][j]

    def vec_mat(self, v, M: PyDense) -> list:
        """``v^T M`` over the current size."""
        f = self.field
        n = M.size
        out = [f.zero] * n
        if f.p is None:
            for vk, r in zip(v, M.rows):
                if vk:
                    for j in range(n):
                        out[j] += vk * r[j]
            return out
        p = f.p
        for vk, r in zip(v, M.rows):
            if vk:
                for j in range(n):
                    out[j] = (out[j] + vk * r[j]) % p
        return out

    def mat_vec(self, M: PyDense, v) -> list:
        f = self.field
        if f.p is None:
            return [sum((a * b for a, b in zip(r, v) if a and b), f.zero) for r in M.rows]
        p = f.p
        return [sum(a * b for a, b in zip(r, v)) % p for r in M.rows]

    def rank1_sub(self, M: PyDense, u, v) -> None:
        """``M -= u v^T`` in place."""
        f = self.field
        n = M.size
        if f.p is None:
            for uh, r in zip(u, M.rows):
                if uh:
                    for m in range(n):
                        if v[m]:
                            r[m] -= uh * v[m]
            return
        p = f.p
        for uh, r in zip(u, M.rows):
            if uh:
                for m in range(n):
                    r[m] = (r[m] - uh * v[m]) % p
