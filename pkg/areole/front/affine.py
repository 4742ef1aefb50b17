#!/usr/bin/python3
"""
Affine forms over loop counters, with coefficients that may involve
symbolic parameters.

Expressions are converted to sympy, where affinity is a degree check and
the Jacobians are plain derivatives.
"""
from typing import Dict, Mapping, Sequence, Tuple
import sympy
from areole.front.ast import Access, BinOp, IntLit, Name, Neg
from areole.utils.exceptions import (
        AffinityViolation, ParametricLimitationError,
        UnsupportedConstructError
        )


def symbol(name: str) -> sympy.Symbol:
    """The sympy symbol standing for a counter or parameter."""
    return sympy.Symbol(name, integer=True)


def to_sympy(node) -> sympy.Expr:
    """
    Convert an expression tree to sympy.

    Raises:
        UnsupportedConstructError: For array accesses (indirection) and
        divisions, which leave the integer-linear world.
    """
    if isinstance(node, IntLit):
        return sympy.Integer(node.value)
    if isinstance(node, Name):
        return symbol(node.name)
    if isinstance(node, Neg):
        return -to_sympy(node.operand)
    if isinstance(node, BinOp):
        left, right = to_sympy(node.left), to_sympy(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        raise UnsupportedConstructError(
            "Division is not allowed in subscripts or loop bounds.",
            node.span)
    if isinstance(node, Access):
        raise UnsupportedConstructError(
            f"Array-indexed subscript through '{node.array}' is outside "
            "the polytope model.", node.span)
    raise TypeError(f"Not an expression node: {node!r}")


def bind(expr: sympy.Expr, bindings: Mapping[str, int]) -> sympy.Expr:
    """Substitute parameter values by name."""
    expr = sympy.sympify(expr)
    if not bindings:
        return expr
    return expr.subs(
        {s: bindings[s.name] for s in expr.free_symbols
         if s.name in bindings})


def as_int(expr: sympy.Expr, bindings: Mapping[str, int] = None,
           what: str = "value") -> int:
    """
    Evaluate expr to an integer after binding parameters.

    Raises:
        ParametricLimitationError: If unbound parameters remain.
    """
    value = bind(sympy.sympify(expr), bindings or {})
    if not value.is_Integer:
        raise ParametricLimitationError(
            f"The {what} '{value}' is symbolic; a number is required.")
    return int(value)


class AffineExpr:
    """
    An affine form sum(c_x * x) + c_0 over the given counters.

    The coefficients c_x and the constant c_0 are integers or polynomials
    in the parameters.

    Attributes:
        expr (sympy.Expr): The expanded expression.
        counters (Tuple[str, ...]): Counter names the form is affine in.
    """
    __slots__ = ("expr", "counters")

    def __init__(self, expr, counters: Sequence[str] = (),
                 text: str = None, location=None):
        self.expr = sympy.expand(sympy.sympify(expr))
        self.counters = tuple(counters)
        self._check_affine(text or str(self.expr), location)

    @classmethod
    def from_node(cls, node, counters: Sequence[str],
                  text: str = None) -> "AffineExpr":
        return cls(to_sympy(node), counters, text, node.span)

    def _check_affine(self, text: str, location) -> None:
        gens = [symbol(c) for c in self.counters
                if symbol(c) in self.expr.free_symbols]
        if not gens:
            return
        try:
            poly = sympy.Poly(self.expr, *gens)
        except sympy.PolynomialError:
            raise AffinityViolation(
                text, "not a polynomial in the loop counters", location)
        if poly.total_degree() > 1:
            raise AffinityViolation(
                text, "product of loop counters", location)

    def coeff(self, counter: str) -> sympy.Expr:
        return sympy.diff(self.expr, symbol(counter))

    @property
    def coeffs(self) -> Dict[str, sympy.Expr]:
        """Nonzero counter coefficients."""
        return {c: self.coeff(c) for c in self.counters
                if self.coeff(c) != 0}

    @property
    def constant(self) -> sympy.Expr:
        return self.expr.subs({symbol(c): 0 for c in self.counters})

    @property
    def parameters(self) -> Tuple[str, ...]:
        names = {s.name for s in self.expr.free_symbols}
        return tuple(sorted(names - set(self.counters)))

    def is_numeric(self, bindings: Mapping[str, int] = None) -> bool:
        bound = bind(self.expr, bindings or {})
        return not ({s.name for s in bound.free_symbols}
                    - set(self.counters))

    def instantiate(self, bindings: Mapping[str, int] = None
                    ) -> Tuple[Tuple[int, ...], int]:
        """
        Integer coefficient vector (in counter order) and constant.

        Raises:
            ParametricLimitationError: If a parameter stays unbound.
        """
        coeffs = tuple(as_int(self.coeff(c), bindings, "coefficient")
                       for c in self.counters)
        return coeffs, as_int(self.constant, bindings, "constant")

    def evaluate(self, point: Mapping[str, int],
                 bindings: Mapping[str, int] = None) -> int:
        values = dict(bindings or {})
        values.update(point)
        return as_int(self.expr, values, "expression")

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineExpr):
            return NotImplemented
        return self.counters == other.counters and \
            sympy.expand(self.expr - other.expr) == 0

    def __hash__(self) -> int:
        return hash((self.counters, self.expr))

    def __repr__(self) -> str:
        return f"AffineExpr({self.expr}, counters={self.counters})"
