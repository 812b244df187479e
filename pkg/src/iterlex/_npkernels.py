"""Prime-field backend storing matrices in growable int64 numpy buffers.

The multiply-add loops run in the compiled :mod:`iterlex._ckernels` module.
"""
from __future__ import annotations

import numpy as np

from . import _ckernels
from .scalar import FieldSpec

MAX_MODULUS = 2**31


class NpDense:
    __slots__ = ("buf", "size")

    def __init__(self, capacity: int = 16):
        self.buf = np.zeros((capacity, capacity), dtype=np.int64)
        self.size = 0

    @property
    def view(self):
        return self.buf[: self.size, : self.size]

    def to_lists(self) -> list[list]:
        return self.view.tolist()


class CompiledModBackend:
    name = "compiled"

    def __init__(self, field: FieldSpec):
        if field.p is None or field.p >= MAX_MODULUS:
            raise ValueError("compiled kernels need a prime modulus below 2**31")
        self.field = field
        self.p = field.p

    def new(self) -> NpDense:
        return NpDense()

    def vector(self, values):
        return np.asarray(list(values), dtype=np.int64)

    def to_list(self, v) -> list:
        return [int(x) for x in v]

    def border(self, M: NpDense, col, row) -> None:
        n = M.size + 1
        if n > M.buf.shape[0]:
            cap = 2 * M.buf.shape[0]
            grown = np.zeros((cap, cap), dtype=np.int64)
            grown[: M.size, : M.size] = M.view
            M.buf = grown
        M.buf[: n - 1, n - 1] = np.asarray(col, dtype=np.int64)
        M.buf[n - 1, :n] = np.asarray(row, dtype=np.int64)
        M.size = n

    def row(self, M: NpDense, i: int):
        return M.buf[i, : M.size]

    def entry(self, M: NpDense, i: int, j: int) -> int:
        return int(M.buf[i, j])

    def vec_mat(self, v, M: NpDense):
        return _ckernels.vec_mat(np.ascontiguousarray(v, dtype=np.int64), M.view, M.size, self.p)

    def mat_vec(self, M: NpDense, v):
        return _ckernels.mat_vec(M.view, np.ascontiguousarray(v, dtype=np.int64), M.size, self.p)

    def rank1_sub(self, M: NpDense, u, v) -> None:
        _ckernels.rank1_sub(M.view, np.ascontiguousarray(u, dtype=np.int64),
                            np.ascontiguousarray(v, dtype=np.int64), M.size, self.p)
