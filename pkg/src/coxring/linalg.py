"""Exact Gaussian elimination over a :mod:`coxring.fields` field.

Dense matrices are lists of rows (lists of field elements); sparse rows are
``{column: value}`` dicts without explicit zeros.
"""
from __future__ import annotations

from typing import Sequence

from .fields import Field


def rref(rows: Sequence[Sequence], F: Field, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[i]`` is the pivot column of ``R[i]`` (pivot entries are 1).
    """
    m = [[F.norm(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = F.inv(prow[c])
        if inv != 1:
            prow = m[r] = [F.norm(x * inv) for x in prow]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    m[i] = [F.norm(a - f * b) if b != 0 else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence], F: Field) -> int:
    return len(rref(rows, F)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, F: Field) -> list[list]:
    """Basis of ``{x : A x = 0}`` in reduced echelon form (pivot entries 1)."""
    R, pivots = rref(rows, F, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(R, pivots):
            if row[f] != 0:
                v[pc] = F.norm(-row[f])
        basis.append(v)
    if not basis:
        return []
    return rref(basis, F, ncols)[0]


def left_kernel(rows: Sequence[Sequence], F: Field) -> list[list]:
    """Basis of ``{y : y^T A = 0}`` in reduced echelon form."""
    k = len(rows)
    if k == 0:
        return []
    ncols = len(rows[0])
    transpose = [[rows[i][j] for i in range(k)] for j in range(ncols)]
    return nullspace(transpose, k, F)


def det(rows: Sequence[Sequence], F: Field):
    m = [[F.norm(x) for x in row] for row in rows]
    n = len(m)
    result = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return F.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = F.norm(-result)
        result = F.norm(result * m[c][c])
        inv = F.inv(m[c][c])
        for i in range(c + 1, n):
            f = F.norm(m[i][c] * inv)
            if f != 0:
                m[i] = [F.norm(a - f * b) for a, b in zip(m[i], m[c])]
    return result


def solve(rows: Sequence[Sequence], rhs: Sequence, F: Field):
    """One solution of ``A x = b``, or ``None`` when inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    R, pivots = rref(aug, F, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def sparse_rank(rows, F: Field) -> int:
    """Rank of a list of sparse rows (dicts column -> value).

    Rows are reduced against stored pivot rows by leading column only, which
    is enough for the rank and keeps fill-in low for the very sparse
    Jacobian and Hilbert matrices.
    """
    pivot_rows: dict[int, dict] = {}
    for src in rows:
        row = {c: F.norm(v) for c, v in src.items()}
        row = {c: v for c, v in row.items() if v != 0}
        while row:
            c = min(row)
            prow = pivot_rows.get(c)
            if prow is None:
                inv = F.inv(row[c])
                pivot_rows[c] = {k: F.norm(v * inv) for k, v in row.items()}
                break
            f = row[c]
            for k, v in prow.items():
                nv = F.norm(row.get(k, F.zero) - f * v)
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
    return len(pivot_rows)
