"""Exact dense linear algebra for small matrices over Fraction/int."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple[tuple, ...]:
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p)) for i in range(n)
    )


def mat_vec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def mat_inv_det(a: Sequence[Sequence]) -> tuple[tuple[tuple[Fraction, ...], ...], Fraction]:
    """Inverse and determinant by Gauss-Jordan elimination over Fractions."""
    n = len(a)
    work = [
        [Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("singular matrix")
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pivot = work[col][col]
        det *= pivot
        work[col] = [x / pivot for x in work[col]]
        for r in range(n):
            if r == col or work[r][col] == 0:
                continue
            f = work[r][col]
            work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    inv = tuple(tuple(row[n:]) for row in work)
    return inv, det


def to_int_vector(v: Sequence) -> tuple[int, ...]:
    """Cast exact rationals to ints; ValueError if any denominator is not 1."""
    out = []
    for x in v:
        f = Fraction(x)
        if f.denominator != 1:
            raise ValueError(f"non-integer coordinate {x}")
        out.append(int(f))
    return tuple(out)


def to_int_matrix(a: Sequence[Sequence]) -> Matrix:
    return tuple(to_int_vector(row) for row in a)
