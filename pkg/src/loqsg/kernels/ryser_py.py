"""Ryser's permanent formula, vectorized over numpy.

perm(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} A_ij.

All 2^n - 1 column subsets are materialized as a membership matrix and the
row sums evaluated with one matmul; subsets are chunked to bound memory for
larger n.
"""

import numpy as np

_CHUNK = 1 << 16


def permanent_py(a: np.ndarray) -> complex:
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0j
    if n == 1:
        return complex(a[0, 0])
    bits = np.arange(n, dtype=np.uint64)
    total = 0j
    for start in range(1, (1 << n), _CHUNK):
        stop = min(start + _CHUNK, 1 << n)
        subsets = np.arange(start, stop, dtype=np.uint64)
        member = ((subsets[:, None] >> bits) & 1).astype(np.float64)
        rowsums = member @ a.T  # (chunk, n): sum_{j in S} A_ij
        prods = np.prod(rowsums, axis=1)
        signs = 1.0 - 2.0 * (member.sum(axis=1).astype(np.int64) % 2)
        total += signs @ prods
    return complex((-1.0) ** n * total)
