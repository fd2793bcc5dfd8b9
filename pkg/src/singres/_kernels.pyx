# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled minor-scan kernels.

Hot inner loops of the root-of-unity scans: zero tests for signed integer
combinations of roots of unity, expressed through a reduction table whose
row j is zeta_n^j reduced modulo the n-th cyclotomic polynomial.  Mirrors
`singres._kernels_py`.
"""

import numpy as np

BACKEND = "compiled"


cdef inline long _imod(long e, long n) nogil:
    cdef long r = e % n
    if r < 0:
        r += n
    return r


cdef bint _det3_zero(const long[:, ::1] table, long n, long phi,
                     long a, long b, long c, long p, long q) nogil:
    cdef long i
    cdef long e0 = _imod(p * b + q * c, n)
    cdef long e1 = _imod(p * c + q * b, n)
    cdef long e2 = _imod(p * a + q * c, n)
    cdef long e3 = _imod(p * c + q * a, n)
    cdef long e4 = _imod(p * a + q * b, n)
    cdef long e5 = _imod(p * b + q * a, n)
    for i in range(phi):
        if (table[e0, i] - table[e1, i] - table[e2, i]
                + table[e3, i] + table[e4, i] - table[e5, i]) != 0:
            return False
    return True


def unity_combo_is_zero(const long[:, ::1] table, exps, coefs):
    """Is sum_i coefs[i] * zeta^exps[i] equal to 0 in Z[zeta_n]?"""
    cdef long n = table.shape[0]
    cdef long phi = table.shape[1]
    cdef long i, j, e, c
    acc = np.zeros(phi, dtype=np.int64)
    cdef long[::1] av = acc
    for j in range(len(exps)):
        c = coefs[j]
        if c == 0:
            continue
        e = _imod(exps[j], n)
        for i in range(phi):
            av[i] += c * table[e, i]
    for i in range(phi):
        if av[i] != 0:
            return False
    return True


def det3_unity_is_zero(const long[:, ::1] table, long a, long b, long c,
                       long p, long q):
    """Zero test for det [[1,1,1],[x^a,x^b,x^c],[y^a,y^b,y^c]], x=z^p, y=z^q."""
    return _det3_zero(table, table.shape[0], table.shape[1], a, b, c, p, q)


def all_minors_vanish(const long[:, ::1] table, const long[::1] bexps,
                      long p, long q):
    """Do all 3x3 minors of the unity Vandermonde matrix over bexps vanish?"""
    cdef long n = table.shape[0]
    cdef long phi = table.shape[1]
    cdef long m = bexps.shape[0]
    cdef long i, j, k
    for i in range(m - 2):
        for j in range(i + 1, m - 1):
            for k in range(j + 1, m):
                if not _det3_zero(table, n, phi, bexps[i], bexps[j], bexps[k], p, q):
                    return False
    return True
