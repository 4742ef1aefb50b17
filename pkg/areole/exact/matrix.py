#!/usr/bin/python3
"""
Dense integer matrices with exact arithmetic.

Entries are Python integers, so no product or sum can overflow. Every
matrix in the analysis is tiny (a handful of rows and columns), hence the
plain row-major tuple storage.
"""
from typing import Iterable, List, Sequence, Tuple
import sympy
from areole.utils.exceptions import DimensionMismatchError


class IntMatrix:
    """
    Immutable integer matrix stored row-major.

    Attributes:
        rows (int): Number of rows.
        cols (int): Number of columns.
    """
    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix.")
        self.rows = rows
        self.cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]],
                  cols: int = None) -> "IntMatrix":
        """
        Build a matrix from a list of rows.

        Args:
            rows: The rows; all must have the same length.
            cols: Column count, required when there are no rows.
        """
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError("Ragged rows.")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]],
                     rows: int) -> "IntMatrix":
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0
                          for i in range(n) for j in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[int, ...]:
        return self._entries

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Entry ({i}, {j}) outside {self.shape}.")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self._entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self._entries[i * self.cols + j]
                     for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.rows, self.cols, list(self._entries))

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(
            [self.row(i) for i in range(self.rows)], self.cols)

    def submatrix(self, row_slice: slice, col_slice: slice) -> "IntMatrix":
        rows = range(self.rows)[row_slice]
        cols = range(self.cols)[col_slice]
        return IntMatrix.from_rows(
            [[self[i, j] for j in cols] for i in rows], len(cols))

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        """Concatenate column blocks sharing the row count."""
        blocks = (self,) + others
        for b in blocks:
            if b.rows != self.rows:
                raise DimensionMismatchError(
                    f"Cannot join {b.rows}-row block to {self.rows} rows.")
        return IntMatrix.from_rows(
            [[e for b in blocks for e in b.row(i)]
             for i in range(self.rows)],
            sum(b.cols for b in blocks))

    def vstack(self, *others: "IntMatrix") -> "IntMatrix":
        """Concatenate row blocks sharing the column count."""
        blocks = (self,) + others
        for b in blocks:
            if b.cols != self.cols:
                raise DimensionMismatchError(
                    f"Cannot stack {b.cols}-column block on {self.cols}.")
        return IntMatrix(sum(b.rows for b in blocks), self.cols,
                         [e for b in blocks for e in b.entries])

    def apply(self, vector: Sequence) -> Tuple:
        """Matrix-vector product; works for int and Fraction vectors."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} for {self.cols} columns.")
        return tuple(sum((a * x for a, x in zip(self.row(i), vector)), 0)
                     for i in range(self.rows))

    def is_zero(self) -> bool:
        return not any(self._entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r}, shape={self.shape})"


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """
    Exact matrix product.

    Raises:
        DimensionMismatchError: If a.cols != b.rows.
    """
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}.")
    b_cols = [b.column(j) for j in range(b.cols)]
    return IntMatrix(a.rows, b.cols, [
        sum(x * y for x, y in zip(a.row(i), col))
        for i in range(a.rows) for col in b_cols])


def determinant(m: IntMatrix) -> int:
    """
    Determinant by Bareiss fraction-free elimination.
    """
    if not m.is_square():
        raise DimensionMismatchError(
            f"Determinant of a non-square {m.rows}x{m.cols} matrix.")
    if m.rows == 0:
        return 1
    return int(m.to_sympy().det(method="bareiss"))
