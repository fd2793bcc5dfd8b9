"""Backend selection for the minor-scan kernels.

Prefers the compiled extension `singres._kernels`; falls back to the
pure-Python/numpy twin `singres._kernels_py` when the extension was not
built.  Both expose the same functions over the same reduction-table
convention, and the test suite asserts they agree.
"""

from __future__ import annotations

import numpy as np

from .exact import unity_reduction_table

try:  # pragma: no cover - depends on whether the extension was built
    from . import _kernels as _impl

    COMPILED = True
except ImportError:  # pragma: no cover
    from . import _kernels_py as _impl

    COMPILED = False

BACKEND = _impl.BACKEND


def backend_name() -> str:
    return BACKEND


def reduction_table_array(n: int) -> np.ndarray:
    """Reduction table for zeta_n as a C-contiguous int64 array.

    Cyclotomic coefficient growth is mild for desk-scale n, but guard the
    int64 cast anyway.
    """
    rows = unity_reduction_table(n)
    arr = np.array(rows, dtype=np.int64)
    if arr.size and np.abs(arr).max() > 2**40:
        raise OverflowError(f"reduction table coefficients too large for n={n}")
    return np.ascontiguousarray(arr)


def unity_combo_is_zero(table, exps, coefs) -> bool:
    return bool(_impl.unity_combo_is_zero(table, list(exps), list(coefs)))


def det3_unity_is_zero(table, a, b, c, p, q) -> bool:
    return bool(_impl.det3_unity_is_zero(table, a, b, c, p, q))


def all_minors_vanish_kernel(table, bexps, p, q) -> bool:
    b = np.ascontiguousarray(np.asarray(bexps, dtype=np.int64))
    return bool(_impl.all_minors_vanish(table, b, p, q))


def get_backends():
    """(name, module) pairs of every available backend, for benchmarks/tests."""
    from . import _kernels_py

    out = [("python", _kernels_py)]
    if COMPILED:
        out.append(("compiled", _impl))
    return out
