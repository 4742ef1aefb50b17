#!/usr/bin/python3
"""
Row echelon decomposition of an integer matrix by unimodular transforms.

Given B of size p x q, find a permutation matrix P, a unimodular matrix U
and blocks H (r x r, lower triangular, positive diagonal) and C such that

    B = P . [[H, 0], [C, 0]] . U

The algorithm keeps the invariant B = P . B' . U while it rewrites B' with
three kinds of elementary matrices, each its own (or an easy) inverse:

- pi_ij: swap rows i and j of B' (P absorbs it on the right), or swap
  columns i and l (U absorbs it on the left);
- sigma_k: negate column k of B' and row k of U;
- kappa_im(alpha): subtract alpha times column i from column m of B' and
  add alpha times row m to row i of U.

For the current pivot row i the lower-right block D = B'[i:, i:] is
inspected: a nonzero row is brought to position i, negative entries are
flipped, the smallest positive entry is moved to column i and the others
are reduced modulo it. This Euclidean loop repeats until the pivot is the
only nonzero entry of the row; then the entries of row i left of the pivot
are reduced into [0, pivot) and i advances. The process stops when D is
null.
"""
from typing import List
from areole.config import Config
from areole.exact.matrix import IntMatrix, mat_mul
from areole.utils.exceptions import EchelonStepLimitError
from areole.utils.logger import get_logger

logger = get_logger(__name__)


class EchelonDecomposition:
    """
    Result of row_echelon.

    Attributes:
        p_mat (IntMatrix): p x p permutation matrix.
        h_mat (IntMatrix): r x r lower triangular, positive diagonal.
        c_mat (IntMatrix): (p - r) x r block.
        u_mat (IntMatrix): q x q unimodular matrix.
        rank (int): r, the row rank of B.
    """
    __slots__ = ("p_mat", "h_mat", "c_mat", "u_mat", "rank", "steps")

    def __init__(self, p_mat: IntMatrix, h_mat: IntMatrix, c_mat: IntMatrix,
                 u_mat: IntMatrix, rank: int, steps: int = 0):
        self.p_mat = p_mat
        self.h_mat = h_mat
        self.c_mat = c_mat
        self.u_mat = u_mat
        self.rank = rank
        self.steps = steps

    @property
    def u_prime(self) -> IntMatrix:
        """First r rows of U."""
        return self.u_mat.submatrix(slice(0, self.rank), slice(None))

    @property
    def u_dprime(self) -> IntMatrix:
        """Last q - r rows of U."""
        return self.u_mat.submatrix(slice(self.rank, None), slice(None))

    def stacked_hc(self) -> IntMatrix:
        """[H; C], the p x r left block of the echelon form."""
        return self.h_mat.vstack(self.c_mat)

    def fitting(self) -> IntMatrix:
        """P . [H; C], mapping pattern coordinates to array cells."""
        return mat_mul(self.p_mat, self.stacked_hc())

    def echelon_form(self) -> IntMatrix:
        """[[H, 0], [C, 0]] padded to p x q."""
        q = self.u_mat.rows
        hc = self.stacked_hc()
        return hc.hstack(IntMatrix.zeros(hc.rows, q - self.rank))

    def reconstruct(self) -> IntMatrix:
        return mat_mul(mat_mul(self.p_mat, self.echelon_form()), self.u_mat)

    def __repr__(self) -> str:
        return (f"EchelonDecomposition(rank={self.rank}, "
                f"H={self.h_mat.to_rows()}, C={self.c_mat.to_rows()})")


class _Workspace:
    """Mutable B', P and U kept in the invariant B = P . B' . U."""

    def __init__(self, b: IntMatrix, limit: int):
        self.b = b.to_rows()
        self.p = IntMatrix.identity(b.rows).to_rows()
        self.u = IntMatrix.identity(b.cols).to_rows()
        self.steps = 0
        self.limit = limit

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.limit:
            raise EchelonStepLimitError(self.limit)

    def swap_rows(self, i: int, j: int) -> None:
        self._tick()
        self.b[i], self.b[j] = self.b[j], self.b[i]
        for row in self.p:
            row[i], row[j] = row[j], row[i]

    def negate_column(self, k: int) -> None:
        self._tick()
        for row in self.b:
            row[k] = -row[k]
        self.u[k] = [-x for x in self.u[k]]

    def swap_columns(self, i: int, l: int) -> None:
        self._tick()
        for row in self.b:
            row[i], row[l] = row[l], row[i]
        self.u[i], self.u[l] = self.u[l], self.u[i]

    def subtract_column(self, i: int, m: int, alpha: int) -> None:
        """Column m -= alpha * column i; row i of U += alpha * row m."""
        self._tick()
        for row in self.b:
            row[m] -= alpha * row[i]
        self.u[i] = [x + alpha * y for x, y in zip(self.u[i], self.u[m])]


def _pivot_row(ws: _Workspace, i: int, ncols: int) -> int:
    """Index of the first row of D with a nonzero entry, or -1."""
    for j in range(i, len(ws.b)):
        if any(ws.b[j][k] != 0 for k in range(i, ncols)):
            return j
    return -1


def _smallest_positive(row: List[int], start: int) -> int:
    best = None
    for k in range(start, len(row)):
        if row[k] > 0 and (best is None or row[k] < row[best]):
            best = k
    return best


def row_echelon(b: IntMatrix) -> EchelonDecomposition:
    """
    Compute B = P . [[H, 0], [C, 0]] . U.

    Ties are broken deterministically: the lowest nonzero row of D becomes
    the pivot row, and among equal smallest positive entries the lowest
    column index wins.

    Args:
        b (IntMatrix): Any integer matrix, including zero and rank
        deficient ones.

    Returns:
        EchelonDecomposition: The factorization and the rank.

    Raises:
        EchelonStepLimitError: If more than AREOLE_ECHELON_STEP_LIMIT
        elementary operations are needed.
    """
    ws = _Workspace(b, Config.get_int('AREOLE_ECHELON_STEP_LIMIT'))
    nrows, ncols = b.rows, b.cols
    i = 0
    while i < nrows and i < ncols:
        j = _pivot_row(ws, i, ncols)
        if j < 0:
            break
        if j != i:
            ws.swap_rows(i, j)

        row = ws.b[i]
        for k in range(i, ncols):
            if row[k] < 0:
                ws.negate_column(k)

        while True:
            row = ws.b[i]
            smallest = _smallest_positive(row, i)
            if smallest != i:
                ws.swap_columns(i, smallest)
            pivot = row[i]
            for m in range(i + 1, ncols):
                if row[m] != 0:
                    ws.subtract_column(i, m, row[m] // pivot)
            if all(row[m] == 0 for m in range(i + 1, ncols)):
                break

        pivot = ws.b[i][i]
        for k in range(i):
            alpha = ws.b[i][k] // pivot
            if alpha != 0:
                ws.subtract_column(i, k, alpha)
        i += 1

    rank = i
    logger.debug(
        "Row echelon of %dx%d matrix: rank %d in %d steps.",
        nrows, ncols, rank, ws.steps)
    return EchelonDecomposition(
        p_mat=IntMatrix.from_rows(ws.p, nrows),
        h_mat=IntMatrix.from_rows([r[:rank] for r in ws.b[:rank]], rank),
        c_mat=IntMatrix.from_rows([r[:rank] for r in ws.b[rank:]], rank),
        u_mat=IntMatrix.from_rows(ws.u, ncols),
        rank=rank,
        steps=ws.steps)
