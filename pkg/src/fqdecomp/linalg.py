"""Exact Gaussian elimination over F_q (matrices of element codes)."""

from __future__ import annotations

from .gf import FieldCtx


def rref(ctx: FieldCtx, rows: list[list[int]], ncols: int):
    """Reduce ``rows`` in place to reduced row echelon form.

    Returns the list of pivot columns; the first ``len(pivots)`` rows are the
    nonzero rows of the result.
    """
    add, mul, neg, inv = ctx.add, ctx.mul, ctx.neg, ctx.inv
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        s = inv[prow[col]]
        if s != 1:
            ms = mul[s]
            prow[:] = [ms[v] for v in prow]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            c = row[col]
            if c:
                mc = mul[neg[c]]
                for j in range(col, ncols):
                    pj = prow[j]
                    if pj:
                        row[j] = add[row[j]][mc[pj]]
        pivots.append(col)
        r += 1
    return pivots


def nullspace(ctx: FieldCtx, rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of {v : rows * v = 0}, one vector per free column."""
    work = [list(r) for r in rows if any(r)]
    pivots = rref(ctx, work, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = ctx.neg[work[i][free]]
        basis.append(v)
    return basis
