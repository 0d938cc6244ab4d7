"""Permanent kernel with compiled core and pure-Python fallback.

The Ryser evaluation is the single hand-written hot loop in the package
(every transition amplitude of the independent verification oracle costs one
permanent, O(2^n n)).  A Cython extension is built on install; when it is
missing, or when LOQSG_PURE_PYTHON=1 is set, the numpy implementation is
selected at import time.  Both backends satisfy the same contract and are
cross-checked in the test suite; benchmarks/bench_permanent.py compares them.
"""

import os

import numpy as np

from loqsg.kernels.ryser_py import permanent_py

BACKEND = "python"
_impl = permanent_py

if not os.environ.get("LOQSG_PURE_PYTHON"):
    try:
        from loqsg.kernels._ryser import permanent_cy as _impl

        BACKEND = "cython"
    except ImportError:
        pass


def permanent(matrix) -> complex:
    """Permanent of a square complex matrix (empty matrix gives 1)."""
    a = np.ascontiguousarray(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("permanent requires a square matrix")
    if a.shape[0] == 0:
        return 1.0 + 0j
    return complex(_impl(a))


__all__ = ["permanent", "permanent_py", "BACKEND"]
