#!/usr/bin/python3
"""
Brute-force lattice referee used by the tests.

Lattice points {B.x : x integer} inside a box are enumerated over the
columns of sympy's Hermite normal form of B, which shares nothing with the
row echelon code under test. The form is a column echelon basis: column t
is zero below its pivot row p_t and the pivot rows increase with t. Once
x_t, ..., x_last are chosen, every row from p_t down is final, so the
coefficients are walked from the last column back and a branch is dropped
as soon as a final row leaves the box.
"""
from typing import FrozenSet, Iterator, List, Sequence, Tuple
from sympy.matrices.normalforms import hermite_normal_form
from areole.config import Config
from areole.exact.matrix import IntMatrix
from areole.utils.exceptions import (
        BudgetExceededError, DimensionMismatchError
        )

Box = Sequence[Tuple[int, int]]


def _basis(gens: IntMatrix) -> List[Tuple[int, ...]]:
    """Columns of the Hermite normal form, zero columns dropped."""
    if gens.cols == 0 or gens.is_zero():
        return []
    hnf = hermite_normal_form(gens.to_sympy())
    columns = [tuple(int(hnf[i, t]) for i in range(hnf.rows))
               for t in range(hnf.cols)]
    return [c for c in columns if any(c)]


def _inside(point: Sequence[int], box: Box, first: int = 0) -> bool:
    return all(lo <= point[i] <= hi
               for i, (lo, hi) in enumerate(box) if i >= first)


def _walk(basis: List[Tuple[int, ...]], pivots: List[int], box: Box,
          t: int, partial: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    if t < 0:
        if _inside(partial, box):
            yield partial
        return
    column, p = basis[t], pivots[t]
    w = column[p]
    lo, hi = box[p]
    ends = sorted(((lo - partial[p]) // w, (hi - partial[p]) // w))
    for x in range(ends[0] - 1, ends[1] + 2):
        point = tuple(a + x * c for a, c in zip(partial, column))
        if _inside(point, box, p):
            yield from _walk(basis, pivots, box, t - 1, point)


def lattice_points_in_box(gens: IntMatrix,
                          box: Box) -> FrozenSet[Tuple[int, ...]]:
    """
    All points B.x, x integer, that fall inside box.

    Raises:
        BudgetExceededError: If the box holds more than
        AREOLE_ENUMERATION_BUDGET candidate points.
    """
    if len(box) != gens.rows:
        raise DimensionMismatchError(
            f"Box of dimension {len(box)} for {gens.rows}-row generators.")
    estimate = 1
    for lo, hi in box:
        estimate *= max(hi - lo + 1, 0)
    budget = Config.get_int('AREOLE_ENUMERATION_BUDGET')
    if estimate > budget:
        raise BudgetExceededError("lattice oracle box", estimate, budget)

    basis = _basis(gens)
    pivots = [max(i for i, x in enumerate(c) if x) for c in basis]
    return frozenset(_walk(basis, pivots, box, len(basis) - 1,
                           (0,) * gens.rows))


def lattice_equal_oracle(b1: IntMatrix, b2: IntMatrix, box: Box) -> bool:
    """
    True iff the integer spans of b1 and b2 agree on every point of box.

    Raises:
        DimensionMismatchError: If b1 and b2 have different row counts.
        BudgetExceededError: If the box is too large.
    """
    if b1.rows != b2.rows:
        raise DimensionMismatchError(
            f"Generators live in dimensions {b1.rows} and {b2.rows}.")
    return lattice_points_in_box(b1, box) == lattice_points_in_box(b2, box)
