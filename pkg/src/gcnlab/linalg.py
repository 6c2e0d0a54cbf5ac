"""Exact dense linear algebra over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def clear_denominators(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (row scaling keeps rank)."""
    out = []
    for row in rows:
        den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        out.append([int(Fraction(v) * den) for v in row])
    return out


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate division is exact (Sylvester's identity), so entries
    stay integral and bounded by minors of the input.
    """
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def inverse(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    """Gauss-Jordan inverse over Fractions; ``None`` for a singular matrix."""
    n = len(matrix)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv = 1 / prow[col]
        if inv != 1:
            for j in range(col, 2 * n):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(col, 2 * n) if prow[j]]
        for r in range(n):
            if r == col:
                continue
            row = aug[r]
            f = row[col]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    return [row[n:] for row in aug]
