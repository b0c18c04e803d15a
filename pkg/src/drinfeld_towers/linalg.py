"""Exact Gaussian elimination over small finite fields.

Matrices are tuples of row tuples; entries are base ints handled through an
ops object (add/sub/mul/inv).  Pivoting is fixed (leftmost column, lowest row
index) so reduced echelon forms are canonical and runs are reproducible.
"""

from __future__ import annotations


def rref(rows, ops):
    """Reduced row echelon form and its pivot columns."""
    mat = [list(r) for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = ops.inv(mat[r][c])
        mat[r] = [ops.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [ops.sub(a, ops.mul(f, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    out = tuple(tuple(row) for row in mat[:r])
    return out, tuple(pivots)


def nullspace(rows, ops):
    """Canonical RREF basis of {v : rows . v = 0}."""
    ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows, ops)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = ops.neg(red[r][fc])
        basis.append(tuple(v))
    red_basis, _ = rref(tuple(basis), ops)
    return red_basis


def solve(rows, rhs, ops):
    """One solution of rows . v = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = tuple(tuple(row) + (b,) for row, b in zip(rows, rhs))
    red, pivots = rref(aug, ops)
    if ncols in pivots:
        return None
    v = [0] * ncols
    for r, pc in enumerate(pivots):
        v[pc] = red[r][ncols]
    return tuple(v)
