"""Exact Gaussian elimination over the rationals.

Deterministic pivoting: columns are eliminated left to right and the pivot
is the first row (smallest index) with a nonzero entry in the current
column, so reduced forms and kernel bases are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(rows: Sequence[Sequence[Fraction]]):
    """Reduced row echelon form.  Returns (reduced rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [e / pv for e in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {v : rows . v = 0}, one vector per free column, with a 1 in
    the free coordinate.  Vectors are scaled to integer entries with
    content 1 so they are primitive and reproducible."""
    if not rows:
        reduced, pivots = [], []
    else:
        reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        scale = 1
        for e in v:
            scale = scale * e.denominator // _gcd(scale, e.denominator) if e else scale
        vi = [e * scale for e in v]
        g = 0
        for e in vi:
            g = _gcd(g, abs(e.numerator))
        if g > 1:
            vi = [e / g for e in vi]
        basis.append(tuple(Fraction(e) for e in vi))
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
