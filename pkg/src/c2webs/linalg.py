"""Exact incremental Gaussian elimination over a pluggable field.

Vectors are sparse dicts {row index: field element}.  The solver keeps a
fully reduced (Gauss-Jordan) echelon set, and remembers how each pivot row
was built from the inserted vectors, so membership queries come back as
coordinates over the original insertion order.
"""

from __future__ import annotations


class NotInSpan(ValueError):
    """A vector was asked for in coordinates but is outside the span."""


class GaussianSolver:
    """Incremental span of sparse vectors over `field`.

    add_basis(vec) inserts a vector; returns True when it enlarged the span.
    solve(vec) returns {insertion index: coefficient} with the insertion
    index counting every add_basis call, dependent ones included.
    """

    def __init__(self, field):
        self.field = field
        # rows: pivot -> (vec, combo); vec[pivot] == 1 and no row's vec meets
        # another row's pivot (Jordan invariant, keeps reduction single-pass)
        self.rows = {}
        self.ninserted = 0

    @property
    def rank(self):
        return len(self.rows)

    def _clean(self, vec):
        f = self.field
        return {k: v for k, v in vec.items() if not f.is_zero(v)}

    def _axpy(self, dst, c, src):
        # dst -= c * src, in place, dropping zeros
        f = self.field
        for k, v in src.items():
            cur = dst.get(k, f.zero)
            cur = f.sub(cur, f.mul(c, v))
            if f.is_zero(cur):
                dst.pop(k, None)
            else:
                dst[k] = cur

    def _reduce(self, vec, combo):
        f = self.field
        for pivot, (bvec, bcombo) in self.rows.items():
            c = vec.get(pivot)
            if c is None or f.is_zero(c):
                continue
            self._axpy(vec, c, bvec)
            self._axpy(combo, c, bcombo)
        return vec, combo

    def add_basis(self, vec):
        f = self.field
        idx = self.ninserted
        self.ninserted += 1
        vec = self._clean(vec)
        combo = {idx: f.one}
        vec, combo = self._reduce(dict(vec), combo)
        if not vec:
            return False
        pivot = min(vec)
        inv = f.div(f.one, vec[pivot])
        vec = {k: f.mul(inv, v) for k, v in vec.items()}
        combo = {k: f.mul(inv, v) for k, v in combo.items()}
        # restore the Jordan invariant: clear the new pivot everywhere
        for opivot, (ovec, ocombo) in self.rows.items():
            c = ovec.get(pivot)
            if c is None or f.is_zero(c):
                continue
            self._axpy(ovec, c, vec)
            self._axpy(ocombo, c, combo)
        self.rows[pivot] = (vec, combo)
        return True

    def solve(self, vec):
        f = self.field
        residual = self._clean(dict(vec))
        coords = {}
        for pivot, (bvec, bcombo) in self.rows.items():
            c = residual.get(pivot)
            if c is None or f.is_zero(c):
                continue
            self._axpy(residual, c, bvec)
            for k, v in bcombo.items():
                cur = coords.get(k, f.zero)
                cur = f.add(cur, f.mul(c, v))
                if f.is_zero(cur):
                    coords.pop(k, None)
                else:
                    coords[k] = cur
        if residual:
            row = min(residual)
            raise NotInSpan(f"residual nonzero, first at row {row}")
        return coords


def nullspace_dim(field, columns, nrows):
    """Dimension of the nullspace of the matrix with the given sparse columns.

    `columns` is an iterable of sparse vectors (dicts); nrows is unused beyond
    documentation since sparse rows never appear, but kept for clarity at call
    sites.
    """
    solver = GaussianSolver(field)
    ncols = 0
    for col in columns:
        ncols += 1
        solver.add_basis(col)
    return ncols - solver.rank
