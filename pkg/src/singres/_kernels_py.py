"""Pure-Python/numpy implementations of the minor-scan kernels.

Same contracts as the compiled `singres._kernels` extension; selected as a
fallback at import time by `singres.kernels`.

All functions take a reduction table `table` of shape (n, phi(n)) whose row j
is zeta_n^j reduced modulo the n-th cyclotomic polynomial, so a signed
integer combination of roots of unity is zero iff its accumulated row vector
is zero.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def unity_combo_is_zero(table, exps, coefs):
    """Is sum_i coefs[i] * zeta^exps[i] equal to 0 in Z[zeta_n]?"""
    n = table.shape[0]
    acc = np.zeros(table.shape[1], dtype=np.int64)
    for e, c in zip(exps, coefs):
        if c:
            acc += c * table[e % n]
    return not acc.any()


def det3_unity_is_zero(table, a, b, c, p, q):
    """Zero test for det [[1,1,1],[x^a,x^b,x^c],[y^a,y^b,y^c]], x=z^p, y=z^q."""
    n = table.shape[0]
    acc = table[(p * b + q * c) % n].copy()
    acc -= table[(p * c + q * b) % n]
    acc -= table[(p * a + q * c) % n]
    acc += table[(p * c + q * a) % n]
    acc += table[(p * a + q * b) % n]
    acc -= table[(p * b + q * a) % n]
    return not acc.any()


def all_minors_vanish(table, bexps, p, q):
    """Do all 3x3 minors of the unity Vandermonde matrix over bexps vanish?

    Early-exits on the first nonvanishing minor; vacuously true for fewer
    than three columns.
    """
    m = len(bexps)
    for i in range(m - 2):
        for j in range(i + 1, m - 1):
            for k in range(j + 1, m):
                if not det3_unity_is_zero(table, bexps[i], bexps[j], bexps[k], p, q):
                    return False
    return True
