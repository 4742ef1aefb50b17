#!/usr/bin/python3
"""
Closed-form echelon forms for matrices with symbolic entries.

Only two shapes have one: a 1x1 matrix is its own normal form (up to
sign), and

    [[a, b], [c, d]]  ->  [[g, 0], [c*u + d*v, |a*d - b*c| / g]]

where g = gcd(a, b) and a*u + b*v = g. g, u and v stay symbols until the
entries are instantiated with integers.
"""
from typing import Mapping, Union
import sympy
from areole.exact.integers import gcd_bezout
from areole.exact.matrix import IntMatrix
from areole.utils.exceptions import (
        DegenerateFormError, ParametricLimitationError
        )

SymbolicInt = Union[int, sympy.Expr]

GCD = sympy.Symbol("g", integer=True, positive=True)
BEZOUT_U = sympy.Symbol("u", integer=True)
BEZOUT_V = sympy.Symbol("v", integer=True)


def _to_int(value: sympy.Expr, bindings: Mapping[str, int]) -> int:
    value = sympy.sympify(value)
    value = value.subs({s: bindings[s.name] for s in value.free_symbols
                        if s.name in bindings})
    if not value.is_Integer:
        raise ParametricLimitationError(
            f"Entry '{value}' is not an integer after instantiation.")
    return int(value)


class SymbolicEchelon2x2:
    """
    The echelon form of [[a, b], [c, d]] as sympy expressions.

    Attributes:
        a, b, c, d (sympy.Expr): The input entries.
        matrix (sympy.Matrix): Entries over a, b, c, d, g, u and v.
    """
    def __init__(self, a: SymbolicInt, b: SymbolicInt,
                 c: SymbolicInt, d: SymbolicInt):
        self.a, self.b, self.c, self.d = (
            sympy.sympify(x) for x in (a, b, c, d))
        if self.a.is_zero and self.b.is_zero:
            raise DegenerateFormError()
        self.matrix = sympy.ImmutableMatrix([
            [GCD, 0],
            [self.c * BEZOUT_U + self.d * BEZOUT_V,
             sympy.Abs(self.a * self.d - self.b * self.c) / GCD]])

    def instantiate(self, bindings: Mapping[str, int] = None) -> IntMatrix:
        """
        Substitute integers for the parameters and for g, u, v.

        Args:
            bindings: Values for the parameters appearing in a, b, c, d.

        Raises:
            DegenerateFormError: If a = b = 0 after instantiation.
        """
        bindings = bindings or {}
        a, b, c, d = (_to_int(x, bindings)
                      for x in (self.a, self.b, self.c, self.d))
        g, u, v = gcd_bezout(a, b)
        if g == 0:
            raise DegenerateFormError(
                f"gcd({self.a}, {self.b}) vanishes for {bindings}.")
        return IntMatrix.from_rows([
            [g, 0],
            [c * u + d * v, abs(a * d - b * c) // g]])

    def __str__(self) -> str:
        rows = self.matrix.tolist()
        return "[" + "; ".join(
            ", ".join(str(e) for e in r) for r in rows) + "]"


def echelon_2x2_symbolic(a: SymbolicInt, b: SymbolicInt,
                         c: SymbolicInt, d: SymbolicInt
                         ) -> SymbolicEchelon2x2:
    """
    Closed-form echelon of the 2x2 matrix [[a, b], [c, d]].

    Raises:
        DegenerateFormError: When a and b are both identically zero.
    """
    return SymbolicEchelon2x2(a, b, c, d)


def echelon_1x1_symbolic(a: SymbolicInt) -> sympy.ImmutableMatrix:
    """A 1x1 matrix [a] has echelon form [|a|]."""
    return sympy.ImmutableMatrix([[sympy.Abs(sympy.sympify(a))]])
