# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled dense mod-p row reduction."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_modp(a, long long p):
    """Reduced row echelon form of ``a`` over F_p; pivots are first nonzero, leftmost column."""
    if p <= 1 or p >= (1 << 31):
        raise ValueError("modulus must be a prime below 2**31")
    cdef cnp.ndarray[i64, ndim=2] arr = np.mod(np.array(a, dtype=np.int64, copy=True), p)
    cdef i64[:, ::1] m = np.ascontiguousarray(arr)
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, k, j, i
    cdef i64 inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        k = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[k, j]
                m[k, j] = tmp
        inv = _inv(m[r, c], p)
        for j in range(c, cols):
            if m[r, j] != 0:
                m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = m[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                if m[r, j] != 0:
                    m[i, j] = (m[i, j] - f * m[r, j]) % p
                    if m[i, j] < 0:
                        m[i, j] += p
        pivots.append(c)
        r += 1
    return np.asarray(m), pivots


def rank_modp(a, long long p):
    return len(rref_modp(a, p)[1])
