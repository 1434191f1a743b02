"""Exact dense linear algebra over GF(p) and the rationals.

GF(p) matrices are numpy int64 arrays of canonical residues; with
p <= 2^31-1 every intermediate product stays below 2^62, so row reduction
is exact.  Rational matrices are lists of Fraction rows reduced by plain
Gaussian elimination.  Only ranks, reduced row echelon forms, nullspaces
and coordinate solves are needed; everything is small and dense.
"""

from __future__ import annotations

import numpy as np

from .fields import PrimeField


def rref(rows, field):
    """Reduced row echelon form.

    Returns ``(rows, pivot_columns)`` where ``rows`` are the nonzero
    echelon rows as lists of field elements, pivots normalized to 1 and
    cleared above and below.
    """
    if isinstance(field, PrimeField):
        return _rref_mod_p(rows, field.p)
    return _rref_generic(rows, field)


def _rref_mod_p(rows, p):
    rows = list(rows)
    if not rows:
        return [], []
    A = np.asarray(rows, dtype=np.int64) % p
    nr, nc = A.shape
    r = 0
    pivots = []
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return [list(map(int, row)) for row in A[:r]], pivots


def _rref_generic(rows, field):
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nr, nc = len(m), len(m[0])
    r = 0
    pivots = []
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if not field.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        for i in range(nr):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, field) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows, field):
    """Basis of the right kernel {v : A v = 0}, one list per basis vector."""
    rows = list(rows)
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = field.neg(row[fc])
        basis.append(v)
    return basis


def coords_in_span(basis_rows, targets, field):
    """Coordinates of each target vector in the span of independent rows.

    Raises ValueError if the rows are dependent or a target escapes the
    span.  Returns one coordinate list per target.
    """
    basis_rows = list(basis_rows)
    k = len(basis_rows)
    if k == 0:
        for t in targets:
            if any(not field.is_zero(v) for v in t):
                raise ValueError("target not in span of empty basis")
        return [[] for _ in targets]
    m = len(basis_rows[0])
    aug = []
    for i, row in enumerate(basis_rows):
        tail = [field.zero] * k
        tail[i] = field.one
        aug.append(list(row) + tail)
    red, pivots = rref(aug, field)
    if len(pivots) != k or any(p >= m for p in pivots):
        raise ValueError("basis rows are linearly dependent")
    out = []
    for t in targets:
        v = list(t) + [field.zero] * k
        for row, p in zip(red, pivots):
            c = v[p]
            if not field.is_zero(c):
                v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
        if any(not field.is_zero(x) for x in v[:m]):
            raise ValueError("target not in span")
        out.append([field.neg(x) for x in v[m:]])
    return out
