# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense mod-p kernels over int64 buffers.

Every entry lies in ``range(p)`` with ``p < 2**31``, so a product plus an entry
fits in a signed 64-bit integer; the running value is reduced after each
multiply-add.
"""
import numpy as np


def vec_mat(const long long[::1] v, const long long[:, :] M, Py_ssize_t n, long long p):
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t k, j
    cdef long long vk
    for k in range(n):
        vk = v[k]
        if vk:
            for j in range(n):
                o[j] = (o[j] + vk * M[k, j]) % p
    return out


def mat_vec(const long long[:, :] M, const long long[::1] v, Py_ssize_t n, long long p):
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t h, k
    cdef long long acc
    for h in range(n):
        acc = 0
        for k in range(n):
            acc = (acc + M[h, k] * v[k]) % p
        o[h] = acc
    return out


def rank1_sub(long long[:, :] M, const long long[::1] u, const long long[::1] v,
              Py_ssize_t n, long long p):
    cdef Py_ssize_t h, m
    cdef long long t
    for h in range(n):
        if u[h]:
            t = p - u[h]
            for m in range(n):
                M[h, m] = (M[h, m] + t * v[m]) % p
