"""Exact dense linear algebra over a prime field.

Matrices are plain lists of row lists with integer entries mod q.  Pivoting
is by position (exact arithmetic has no magnitude concerns), so the reduced
row echelon form, ranks, and null-space bases are all canonical.
"""

from __future__ import annotations


def rref(rows: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form.

    Returns (nonzero rows, pivot column indices); the input is not mutated.
    """
    m = [[v % q for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [(inv * v) % q for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(vi - f * vr) % q for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def matrix_rank(rows: list[list[int]], q: int) -> int:
    """Exact rank over F_q."""
    reduced, _ = rref(rows, q)
    return len(reduced)


def null_space(rows: list[list[int]], ncols: int, q: int) -> list[list[int]]:
    """Canonical basis of {x : A x = 0} for the ncols-column matrix A.

    One basis vector per free column (ascending), carrying 1 at its own free
    column and the negated echelon entries at the pivot columns.  An empty
    row list means no constraints: the identity basis comes back.
    """
    for row in rows:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)} in a {ncols}-column system")
    reduced, pivots = rref(rows, q)
    pivot_set = set(pivots)
    basis: list[list[int]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, p in enumerate(pivots):
            v[p] = (-reduced[i][free]) % q
        basis.append(v)
    return basis
