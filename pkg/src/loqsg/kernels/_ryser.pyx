# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Ryser permanent with Gray-code subset updates."""

cdef extern from "complex.h":
    pass


def permanent_cy(double complex[:, ::1] a):
    cdef Py_ssize_t n = a.shape[0]
    if n == 0:
        return 1.0 + 0j
    cdef double complex[64] rowsum
    cdef double complex total = 0
    cdef double complex prod
    cdef unsigned long long k, gray, prev = 0, changed, count, gray_copy
    cdef Py_ssize_t i, col, bits
    if n > 63:
        raise ValueError("matrix too large for the compiled kernel")
    for i in range(n):
        rowsum[i] = 0
    count = (<unsigned long long> 1 << n) - 1
    for k in range(1, count + 1):
        gray = k ^ (k >> 1)
        changed = gray ^ prev
        col = 0
        while not (changed >> col) & 1:
            col += 1
        if (gray >> col) & 1:
            for i in range(n):
                rowsum[i] = rowsum[i] + a[i, col]
        else:
            for i in range(n):
                rowsum[i] = rowsum[i] - a[i, col]
        prod = 1
        for i in range(n):
            prod = prod * rowsum[i]
        bits = 0
        gray_copy = gray
        while gray_copy:
            bits += <Py_ssize_t> (gray_copy & 1)
            gray_copy >>= 1
        if bits & 1:
            total = total - prod
        else:
            total = total + prod
        prev = gray
    if n & 1:
        total = -total
    return complex(total)
