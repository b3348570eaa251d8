"""Dense matrices over the rationals with fraction-free rank."""

from __future__ import annotations

import math
from fractions import Fraction


class ExactMatrix:
    """A ``rows x cols`` matrix of :class:`fractions.Fraction` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [[Fraction(0)] * cols for _ in range(rows)]
        self.entries = [[Fraction(x) for x in row] for row in entries]
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ValueError("entry shape does not match (rows, cols)")

    @classmethod
    def from_columns(cls, rows: int, columns) -> "ExactMatrix":
        columns = list(columns)
        return cls(rows, len(columns), [[col[i] for col in columns] for i in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = [
            [sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), Fraction(0))
             for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return ExactMatrix(self.rows, other.cols, out)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def rank(self) -> int:
        return bareiss_rank(self.integer_rows())

    def integer_rows(self) -> list[list[int]]:
        """Rows scaled by the lcm of their denominators (rank-preserving)."""
        out = []
        for row in self.entries:
            lcm = math.lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * lcm) for x in row])
        return out

    def is_isomorphism(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def to_json(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.entries]


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            f = a[r][col]
            for c in range(col + 1, n):
                # exact division is the Bareiss invariant
                a[r][c] = (p * a[r][c] - f * a[rank][c]) // prev
            a[r][col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank
