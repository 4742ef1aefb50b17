#!/usr/bin/python3
"""
Rational vectors and exact linear algebra over the rationals (sympy).

These routines do not use the integer row echelon code; rank_oracle is
the reference the echelon tests are checked against.
"""
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple
import sympy
from areole.exact.matrix import IntMatrix
from areole.utils.exceptions import (
        DimensionMismatchError, UnderdeterminedSystemError
        )


class RatVector:
    """
    Immutable vector of exact rationals.

    Fraction keeps every coordinate reduced with a positive denominator.
    """
    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable):
        self._coords = tuple(Fraction(c) for c in coords)

    @property
    def dim(self) -> int:
        return len(self._coords)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return self._coords

    def __len__(self) -> int:
        return len(self._coords)

    def __iter__(self):
        return iter(self._coords)

    def __getitem__(self, i: int) -> Fraction:
        return self._coords[i]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coords)

    def to_ints(self) -> Tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integral coordinates.")
        return tuple(c.numerator for c in self._coords)

    def floor(self) -> Tuple[int, ...]:
        return tuple(math.floor(c) for c in self._coords)

    def ceil(self) -> Tuple[int, ...]:
        return tuple(math.ceil(c) for c in self._coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatVector):
            return self._coords == other._coords
        if isinstance(other, (tuple, list)):
            return self._coords == tuple(other)
        return NotImplemented

    def __lt__(self, other: "RatVector") -> bool:
        return self._coords < other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def __repr__(self) -> str:
        return "RatVector(" + ", ".join(str(c) for c in self._coords) + ")"


def _to_fraction(x: sympy.Rational) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def rank_oracle(a: IntMatrix) -> int:
    """
    Row rank of a over the rationals.
    """
    if a.rows == 0 or a.cols == 0:
        return 0
    return int(a.to_sympy().rank())


def rational_solve(a: IntMatrix,
                   b: Sequence) -> Optional[RatVector]:
    """
    Solve a.x = b exactly over the rationals.

    Args:
        a (IntMatrix): Coefficient matrix.
        b (Sequence): Right-hand side (integers, Fractions or a RatVector).

    Returns:
        Optional[RatVector]: The unique solution, or None when the system
        is inconsistent.

    Raises:
        DimensionMismatchError: If len(b) != a.rows.
        UnderdeterminedSystemError: If the system is consistent but a has
            a nontrivial kernel.
    """
    if len(b) != a.rows:
        raise DimensionMismatchError(
            f"Right-hand side of length {len(b)} for {a.rows} equations.")
    rhs = [Fraction(x) for x in b]
    if a.cols == 0:
        return None if any(rhs) else RatVector(())
    if a.rows == 0:
        raise UnderdeterminedSystemError(0, a.cols)

    system = a.to_sympy()
    target = sympy.Matrix(a.rows, 1, [
        sympy.Rational(x.numerator, x.denominator) for x in rhs])
    try:
        solution, free = system.gauss_jordan_solve(target)
    except ValueError:
        return None
    if free.rows:
        raise UnderdeterminedSystemError(system.rank(), a.cols)
    return RatVector(_to_fraction(x) for x in solution)
