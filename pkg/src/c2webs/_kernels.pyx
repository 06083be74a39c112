# cython: language_level=3
"""Compiled Laurent polynomial kernels.

Semantically identical to `_kernels_py`; coefficients stay Python ints so
arbitrary precision is preserved.  The win comes from compiled dict loops.
"""

BACKEND = "cython"


def padd(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, v
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def psub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, v
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def pneg(dict a):
    cdef dict out = {}
    cdef object e, c
    for e, c in a.items():
        out[e] = -c
    return out


def pscale(dict a, n):
    cdef dict out = {}
    cdef object e, c
    if n == 0:
        return out
    for e, c in a.items():
        out[e] = c * n
    return out


def pshift(dict a, k):
    cdef dict out = {}
    cdef object e, c
    if k == 0:
        return dict(a)
    for e, c in a.items():
        out[e + k] = c
    return out


def pmul(dict a, dict b):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, e, v
    if not a or not b:
        return out
    if len(b) < len(a):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def pdivexact(dict a, dict b):
    cdef dict out = {}
    cdef dict rem
    cdef object bmax, bc, rmax, rc, e, c, emin, eb, cb, ne, v
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return out
    bmax = max(b)
    bc = b[bmax]
    emin = min(a) - min(b)
    rem = dict(a)
    while rem:
        rmax = max(rem)
        rc = rem[rmax]
        if rc % bc:
            return None
        e = rmax - bmax
        if e < emin:
            return None
        c = rc // bc
        out[e] = c
        for eb, cb in b.items():
            ne = eb + e
            v = rem.get(ne, 0) - c * cb
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return out
