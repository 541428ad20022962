# cython: language_level=3
"""Compiled term-dict kernels; mirrors `_poly_python` exactly.

Coefficients and exponents stay Python integers (coefficients must be
arbitrary precision), so the speedup comes from compiling the dict and tuple
traffic of the inner loops, not from native arithmetic.
"""


cdef inline tuple _tadd(tuple u, tuple v):
    cdef Py_ssize_t i, n = len(u)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = u[i] + v[i]
    return tuple(out)


def mul_terms(dict a, dict b):
    """Product of two term dicts; zero coefficients are dropped."""
    cdef dict out = {}
    cdef tuple ka, kb, k
    cdef object va, vb, cur
    if len(a) > len(b):
        a, b = b, a
    for ka, va in a.items():
        for kb, vb in b.items():
            k = _tadd(ka, kb)
            cur = out.get(k)
            if cur is None:
                out[k] = va * vb
            else:
                cur = cur + va * vb
                if cur:
                    out[k] = cur
                else:
                    del out[k]
    return out


def add_terms(dict a, dict b):
    """Sum of two term dicts; zero coefficients are dropped."""
    cdef dict out = dict(a)
    cdef tuple k
    cdef object v, cur
    for k, v in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = v
        else:
            cur = cur + v
            if cur:
                out[k] = cur
            else:
                del out[k]
    return out


def iadd_scaled(dict acc, dict src, tuple shift, coeff):
    """In place: acc += coeff * x^shift * src.  Deletes cancelled keys."""
    cdef tuple k, kk
    cdef object v, cur
    if not coeff:
        return
    for k, v in src.items():
        kk = _tadd(k, shift)
        cur = acc.get(kk)
        if cur is None:
            acc[kk] = coeff * v
        else:
            cur = cur + coeff * v
            if cur:
                acc[kk] = cur
            else:
                del acc[kk]
