"""Exact linear algebra on small dense matrices.

Integer matrices are ranked with fraction-free (Bareiss) elimination, so no
intermediate value ever leaves the integers. Affine systems are solved in
reduced row echelon form over ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numeric import Scalar


@dataclass(frozen=True)
class AffineSolution:
    """Solution set ``particular + span(nullspace)`` of ``A x = b``."""

    particular: tuple[Fraction, ...]
    nullspace: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.nullspace)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""

    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        top = rows[rank]
        pivot = top[col]
        for r in range(rank + 1, n_rows):
            row = rows[r]
            factor = row[col]
            for c in range(col + 1, n_cols):
                # exact: every entry is a minor of the original matrix
                row[c] = (pivot * row[c] - factor * top[c]) // previous
            row[col] = 0
        previous = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def solve_affine(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> AffineSolution | None:
    """Solve ``matrix @ x = rhs`` exactly.

    Free variables are set to zero in the particular solution; the nullspace
    holds one basis vector per free variable. Returns None when the system is
    inconsistent.
    """

    if len(matrix) != len(rhs):
        raise ValueError("row count of matrix and right-hand side differ")
    n_cols = len(matrix[0]) if matrix else 0
    rows = [[Fraction(value) for value in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]

    pivot_cols: list[int] = []
    rank = 0
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [value / pivot for value in rows[rank]]
        for r, row in enumerate(rows):
            if r == rank or row[col] == 0:
                continue
            factor = row[col]
            rows[r] = [a - factor * b for a, b in zip(row, rows[rank])]
        pivot_cols.append(col)
        rank += 1

    if any(row[n_cols] != 0 for row in rows[rank:]):
        return None

    particular = [Fraction(0)] * n_cols
    for r, col in enumerate(pivot_cols):
        particular[col] = rows[r][n_cols]

    pivot_set = set(pivot_cols)
    nullspace = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * n_cols
        vector[free] = Fraction(1)
        for r, col in enumerate(pivot_cols):
            vector[col] = -rows[r][free]
        nullspace.append(tuple(vector))

    return AffineSolution(particular=tuple(particular), nullspace=tuple(nullspace))


def mat_vec(matrix: Sequence[Sequence[Scalar]], vector: Sequence[Scalar]) -> list[Scalar]:
    return [sum((a * x for a, x in zip(row, vector)), 0) for row in matrix]
