"""Exact linear algebra over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def to_fractions(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(x) for x in r] for r in rows]


def row_reduce(rows: Sequence[Sequence[object]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = to_fractions(rows)
    if not a:
        return a, []
    m, n = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` for an ``m x ncols`` matrix."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, piv = row_reduce(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def solve_affine(coeffs: Sequence[Sequence[object]], rhs: Sequence[object],
                 free_values: Sequence[Fraction] | None = None) -> tuple[int, bool, list[Fraction] | None]:
    """Solve ``A x = b``; returns ``(rank, consistent, one solution)``.

    Free variables take ``free_values`` in column order (zero if omitted).
    """
    m = len(coeffs)
    n = len(coeffs[0]) if m else 0
    aug = [list(coeffs[i]) + [rhs[i]] for i in range(m)]
    red, piv = row_reduce(aug) if m else ([], [])
    if n in piv:
        return len(piv) - 1, False, None
    free = [c for c in range(n) if c not in piv]
    fv = list(free_values or [])
    x = [Fraction(0)] * n
    for k, c in enumerate(free):
        x[c] = Fraction(fv[k]) if k < len(fv) else Fraction(0)
    for r, pc in enumerate(piv):
        x[pc] = red[r][n] - sum(red[r][c] * x[c] for c in free)
    return len(piv), True, x


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(r) for r in zip(*a)]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    ab, ba = matmul(a, b), matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def scale(c: Fraction, a: Matrix) -> Matrix:
    return [[c * x for x in r] for r in a]


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for r in a for x in r)
