"""Exact sparse Gaussian elimination over Q.

Rows are dicts ``{column: Fraction}``; zero entries are never stored.  This is
enough for the Clifford computations, whose matrices are signed sums of
permutation matrices and hence very sparse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

Row = Dict[int, Fraction]


def _axpy(target: Row, factor: Fraction, source: Row) -> None:
    for col, val in source.items():
        new = target.get(col, 0) - factor * val
        if new:
            target[col] = new
        else:
            target.pop(col, None)


def rref(rows: Sequence[Row]) -> Tuple[List[Row], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    pivots: Dict[int, Row] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        # pivot rows are fully reduced, so one pass clears every pivot column
        for col in [c for c in row if c in pivots]:
            _axpy(row, row[col], pivots[col])
        if not row:
            continue
        col = min(row)
        lead = row[col]
        row = {c: v / lead for c, v in row.items()}
        for other in pivots.values():
            if col in other:
                _axpy(other, other[col], row)
        pivots[col] = row
    order = sorted(pivots)
    return [pivots[c] for c in order], order


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of {x : rows . x = 0}, one dense vector per free column."""
    reduced, piv = rref(rows)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, p in zip(reduced, piv):
            if free in row:
                vec[p] = -row[free]
        basis.append(vec)
    return basis


def solve(rows: Sequence[Row], rhs: Sequence, ncols: int):
    """Unique solution of the square system, or None if it is singular."""
    augmented = []
    for row, b in zip(rows, rhs):
        aug = dict(row)
        if b:
            aug[ncols] = Fraction(b)
        augmented.append(aug)
    reduced, piv = rref(augmented)
    if len(piv) != ncols or (piv and piv[-1] >= ncols):
        return None
    return [row.get(ncols, Fraction(0)) for row in reduced]


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a small dense matrix by elimination."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    result = Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if a[r][i]), None)
        if p is None:
            return Fraction(0)
        if p != i:
            a[i], a[p] = a[p], a[i]
            result = -result
        result *= a[i][i]
        for r in range(i + 1, n):
            if a[r][i]:
                f = a[r][i] / a[i][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return result
