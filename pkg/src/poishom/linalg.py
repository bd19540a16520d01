"""Exact linear algebra over the rationals for graded complex cells.

Matrices are stored sparsely as (row, col) -> Fraction.  Rank is computed by
clearing denominators row by row and running fraction-free (Bareiss) row
reduction over the integers, which keeps intermediate entries as minors of
the input instead of letting fractions pile up.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

__all__ = ["SparseMatrix", "exact_rank"]

_ZERO = Fraction(0)


class SparseMatrix:
    """Rational matrix with explicit shape and sparse storage."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int,
                 entries: "dict[tuple[int, int], Fraction] | None" = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix shape must be non-negative")
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (r, c), v in entries.items():
                self.add_to(r, c, v)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        m = cls(nrows, ncols)
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                m.add_to(r, c, v)
        return m

    def _check_index(self, r: int, c: int) -> None:
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")

    def add_to(self, r: int, c: int, value) -> None:
        """Accumulate into one entry, dropping it if the sum is zero."""
        self._check_index(r, c)
        v = self.entries.get((r, c), _ZERO) + Fraction(value)
        if v:
            self.entries[(r, c)] = v
        else:
            self.entries.pop((r, c), None)

    def __getitem__(self, key: "tuple[int, int]") -> Fraction:
        self._check_index(*key)
        return self.entries.get(key, _ZERO)

    def is_zero(self) -> bool:
        return not self.entries

    def nnz(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}"
            )
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (k, c), v in other.entries.items():
            by_row.setdefault(k, []).append((c, v))
        out = SparseMatrix(self.nrows, other.ncols)
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                out.add_to(r, c, a * b)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == (
            other.nrows, other.ncols, other.entries)

    def to_rows(self) -> "list[list[Fraction]]":
        rows = [[_ZERO] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def rank(self) -> int:
        return _bareiss_rank(self._integer_rows())

    def _integer_rows(self) -> "list[list[int]]":
        rows: list[list[int]] = []
        dense = self.to_rows()
        for row in dense:
            if all(v == 0 for v in row):
                continue
            scale = lcm(*(v.denominator for v in row if v))
            rows.append([int(v * scale) for v in row])
        return rows

    def __repr__(self) -> str:
        return f"<SparseMatrix {self.nrows}x{self.ncols}, {self.nnz()} nonzero>"


def _bareiss_rank(rows: "list[list[int]]") -> int:
    """Rank by one-step fraction-free elimination; mutates ``rows``."""
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    pivot_row = 0
    prev = 1
    for col in range(ncols):
        if pivot_row == nrows:
            break
        found = None
        for r in range(pivot_row, nrows):
            if rows[r][col]:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pivot = rows[pivot_row][col]
        top = rows[pivot_row]
        for r in range(pivot_row + 1, nrows):
            row = rows[r]
            factor = row[col]
            for c in range(col + 1, ncols):
                # exact by Sylvester's identity: the result is a minor
                row[c] = (pivot * row[c] - factor * top[c]) // prev
            row[col] = 0
        prev = pivot
        pivot_row += 1
    return pivot_row


def exact_rank(matrix) -> "tuple[int, int]":
    """(rank, kernel dimension) of a rational matrix.

    Accepts a :class:`SparseMatrix` or a sequence of rows.  The kernel
    dimension refers to the column kernel, so the pair always sums to the
    number of columns.
    """
    if not isinstance(matrix, SparseMatrix):
        matrix = SparseMatrix.from_rows([list(row) for row in matrix])
    r = matrix.rank()
    return r, matrix.ncols - r
