"""Pure-Python Laurent polynomial kernels.

A Laurent polynomial in q is a dict mapping exponent (int) to a nonzero
integer coefficient.  The empty dict is zero.  These functions are the hot
path of the whole package; `_kernels.pyx` is a compiled twin with identical
semantics, and `_backend` picks one at import time.
"""

from __future__ import annotations

BACKEND = "python"


def padd(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def psub(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def pneg(a):
    return {e: -c for e, c in a.items()}


def pscale(a, n):
    if n == 0:
        return {}
    return {e: c * n for e, c in a.items()}


def pshift(a, k):
    if k == 0:
        return dict(a)
    return {e + k: c for e, c in a.items()}


def pmul(a, b):
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def pdivexact(a, b):
    """Exact quotient a/b in Z[q, q^-1], or None when b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return {}
    bmax = max(b)
    bc = b[bmax]
    # a = b*c forces min-exponents to add, bounding the quotient from below.
    emin = min(a) - min(b)
    out = {}
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
