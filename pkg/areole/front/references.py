#!/usr/bin/python3
"""
Array references of a parsed program and their Jacobians.

Every textual array access e(r, j) becomes an ArrayReference. Splitting
its counters into the repetition counters r and the inner counters j, the
subscript function is required to be affine:

    e(r, j) = P.r + B.j + e(0, 0)

where P (the paving matrix) and B (the local matrix) are the Jacobians
with respect to r and j.
"""
from typing import Dict, List, Literal, Mapping, Optional, Tuple
import itertools
import sympy
from pydantic import BaseModel, ConfigDict, Field
from areole.config import Config
from areole.exact.matrix import IntMatrix
from areole.front.affine import AffineExpr, as_int, symbol, to_sympy
from areole.front.ast import (
    Access, ArrayDecl, ForLoop, Program, iter_accesses, walk_statements
)
from areole.front.printer import render_expression
from areole.geometry.domain import IterationDomain, domain_from_bounds
from areole.utils.error_handler import handle_error
from areole.utils.exceptions import (
        AffinityViolation, BudgetExceededError, NonSquareRepetitionError,
        RepetitionDependentDomainError, RepetitionPragmaError,
        UndeclaredArrayError, UnsupportedConstructError
        )
from areole.utils.logger import get_logger

logger = get_logger(__name__)

Bindings = Mapping[str, int]


def _upper_inclusive(loop: ForLoop) -> sympy.Expr:
    upper = to_sympy(loop.upper)
    return upper if loop.inclusive else upper - 1


def _to_int_matrix(m: sympy.ImmutableMatrix, bindings: Optional[Bindings],
                   what: str) -> IntMatrix:
    return IntMatrix(m.rows, m.cols,
                     [as_int(e, bindings, what) for e in m])


class RepetitionSpace(BaseModel):
    """
    Inclusive bounds of the repetition counters.

    Attributes:
        counters (Tuple[str, ...]): r, outermost first.
        lower (Tuple[sympy.Expr, ...]): Lower bounds.
        upper (Tuple[sympy.Expr, ...]): Inclusive upper bounds.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    counters: Tuple[str, ...] = ()
    lower: Tuple[sympy.Expr, ...] = ()
    upper: Tuple[sympy.Expr, ...] = ()

    @property
    def parameters(self) -> Tuple[str, ...]:
        return tuple(sorted({s.name for b in self.lower + self.upper
                             for s in b.free_symbols}))

    def is_numeric(self, bindings: Bindings = None) -> bool:
        return set(self.parameters) <= set(bindings or {})

    def ranges(self, bindings: Bindings = None) -> List[Tuple[int, int]]:
        return [(as_int(lo, bindings, "repetition bound"),
                 as_int(hi, bindings, "repetition bound"))
                for lo, hi in zip(self.lower, self.upper)]

    def points(self, bindings: Bindings = None):
        ranges = self.ranges(bindings)
        estimate = 1
        for lo, hi in ranges:
            estimate *= max(hi - lo + 1, 0)
        budget = Config.get_int('AREOLE_ENUMERATION_BUDGET')
        if estimate > budget:
            raise BudgetExceededError("repetition space", estimate, budget)
        return itertools.product(*(range(lo, hi + 1) for lo, hi in ranges))

    def describe(self) -> List[str]:
        return [f"{c} in [{lo}, {hi}]"
                for c, lo, hi in zip(self.counters, self.lower, self.upper)]


class ArrayReference(BaseModel):
    """
    One textual access to an array.

    The Jacobian fields stay None until jacobians() fills them.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    array: ArrayDecl
    occurrence: int = Field(..., ge=1, description="k, per array.")
    index: int = Field(..., ge=0, description="Position among all accesses.")
    access: Literal["read", "write"]
    text: str = Field(..., description="Source text of the access.")
    subscripts: Tuple[AffineExpr, ...]
    repetition_counters: Tuple[str, ...] = ()
    inner_counters: Tuple[str, ...] = ()
    domain: IterationDomain
    paving: Optional[sympy.ImmutableMatrix] = None
    local: Optional[sympy.ImmutableMatrix] = None
    origin: Optional[sympy.ImmutableMatrix] = None
    span: Optional[Tuple[int, int]] = None

    @property
    def label(self) -> str:
        return f"{self.array.name}#{self.occurrence}"

    @property
    def d(self) -> int:
        return len(self.inner_counters)

    @property
    def parameters(self) -> Tuple[str, ...]:
        names = set(self.domain.parameters)
        for sub in self.subscripts:
            names.update(sub.parameters)
        return tuple(sorted(names))

    def is_numeric(self, bindings: Bindings = None) -> bool:
        return set(self.parameters) <= set(bindings or {})

    def paving_matrix(self, bindings: Bindings = None) -> IntMatrix:
        return _to_int_matrix(self.paving, bindings, "paving entry")

    def local_matrix(self, bindings: Bindings = None) -> IntMatrix:
        return _to_int_matrix(self.local, bindings, "local matrix entry")

    def origin_vector(self, bindings: Bindings = None) -> Tuple[int, ...]:
        return tuple(as_int(e, bindings, "origin entry")
                     for e in self.origin)

    def evaluate(self, r: Tuple[int, ...], j: Tuple[int, ...],
                 bindings: Bindings = None) -> Tuple[int, ...]:
        """e(r, j) straight from the subscript expressions."""
        point: Dict[str, int] = dict(zip(self.repetition_counters, r))
        point.update(zip(self.inner_counters, j))
        return tuple(s.evaluate(point, bindings) for s in self.subscripts)


def _domain_of(inner: Tuple[ForLoop, ...],
               repetition: Tuple[str, ...]) -> IterationDomain:
    lower, upper = [], []
    for loop in inner:
        lo, hi = to_sympy(loop.lower), _upper_inclusive(loop)
        names = {s.name for s in (lo.free_symbols | hi.free_symbols)}
        if names & set(repetition):
            raise RepetitionDependentDomainError(loop.counter, loop.span)
        lower.append(lo)
        upper.append(hi)
    return domain_from_bounds([lp.counter for lp in inner], lower, upper)


def extract_references(program: Program) -> List[ArrayReference]:
    """
    One reference per array access in textual order; occurrences are
    numbered per array starting at 1.

    Raises:
        UndeclaredArrayError: Access to an array missing from the header.
        UnsupportedConstructError: Wrong number of subscripts, or a scalar
        inside a subscript.
        RepetitionPragmaError: Access outside the repetition loops.
        RepetitionDependentDomainError: Inner bounds depending on r.
        AffinityViolation: Subscript that is not affine in the counters.
    """
    try:
        repetition = program.repetition_counters
        allowed = set(program.params)
        occurrences: Dict[str, int] = {}
        refs = []
        for index, (node, stmt, enclosing) in enumerate(
                iter_accesses(program)):
            decl = program.array(node.array)
            if decl is None:
                raise UndeclaredArrayError(node.array, node.span)
            if len(node.subscripts) != decl.rank:
                raise UnsupportedConstructError(
                    f"Array '{decl.name}' has rank {decl.rank} but is "
                    f"accessed with {len(node.subscripts)} subscripts.",
                    node.span)
            counters = tuple(loop.counter for loop in enclosing)
            if counters[:len(repetition)] != repetition:
                raise RepetitionPragmaError(
                    f"Access '{render_expression(node)}' is not enclosed by "
                    f"the repetition loops {list(repetition)}.", node.span)
            inner = enclosing[len(repetition):]

            subscripts = []
            for sub in node.subscripts:
                text = render_expression(sub)
                expr = AffineExpr.from_node(sub, counters, text)
                stray = set(expr.parameters) - allowed
                if stray:
                    raise UnsupportedConstructError(
                        f"Subscript '{text}' uses '{sorted(stray)[0]}', "
                        "which is neither a loop counter nor a parameter.",
                        sub.span)
                subscripts.append(expr)

            occurrences[decl.name] = occurrences.get(decl.name, 0) + 1
            refs.append(ArrayReference(
                array=decl, occurrence=occurrences[decl.name], index=index,
                access="write" if node is stmt.target else "read",
                text=render_expression(node), subscripts=tuple(subscripts),
                repetition_counters=repetition,
                inner_counters=tuple(loop.counter for loop in inner),
                domain=_domain_of(inner, repetition), span=node.span))
    except Exception as e:
        handle_error(e, __name__)

    logger.info("Extracted %d references from '%s'.", len(refs),
                program.name)
    return refs


def jacobians(ref: ArrayReference, program: Program = None
              ) -> ArrayReference:
    """
    Fill in P = de/dr, B = de/dj and e(0, 0).

    Entries may hold parameters. The identity e = P.r + B.j + e(0, 0) is
    checked symbolically for every subscript.

    Raises:
        AffinityViolation: If an entry depends on a counter or the
        identity does not hold.
    """
    counters = ref.repetition_counters + ref.inner_counters
    r_syms = [symbol(c) for c in ref.repetition_counters]
    j_syms = [symbol(c) for c in ref.inner_counters]
    rows = len(ref.subscripts)
    paving, local, origin = [], [], []
    for sub in ref.subscripts:
        p_row = [sub.coeff(c) for c in ref.repetition_counters]
        b_row = [sub.coeff(c) for c in ref.inner_counters]
        for entry in p_row + b_row:
            if {s.name for s in entry.free_symbols} & set(counters):
                raise AffinityViolation(
                    str(sub.expr), "Jacobian entry depends on a loop counter",
                    ref.span)
        const = sub.constant
        rebuilt = sum((a * x for a, x in zip(p_row, r_syms)), 0) \
            + sum((b * x for b, x in zip(b_row, j_syms)), 0) + const
        if sympy.expand(sub.expr - rebuilt) != 0:
            raise AffinityViolation(
                str(sub.expr), "affine identity does not hold", ref.span)
        paving.extend(p_row)
        local.extend(b_row)
        origin.append(const)
    logger.debug("Jacobians of %s: P=%s B=%s b=%s", ref.label, paving,
                 local, origin)
    return ref.model_copy(update=dict(
        paving=sympy.ImmutableMatrix(rows, len(r_syms), paving),
        local=sympy.ImmutableMatrix(rows, len(j_syms), local),
        origin=sympy.ImmutableMatrix(rows, 1, origin)))


def repetition_space(program: Program) -> RepetitionSpace:
    """
    Bounds of the repetition loops.

    Raises:
        NonSquareRepetitionError: If a repetition bound mentions a loop
        counter.
    """
    try:
        counters = {loop.counter for loop in program.loops()}
        loops = {stmt.counter: stmt for stmt, _ in
                 walk_statements(program.body)
                 if isinstance(stmt, ForLoop)
                 and stmt.counter in program.repetition_counters}
        lower, upper = [], []
        for name in program.repetition_counters:
            loop = loops[name]
            lo, hi = to_sympy(loop.lower), _upper_inclusive(loop)
            if {s.name for s in lo.free_symbols | hi.free_symbols} \
                    & counters:
                raise NonSquareRepetitionError(name, loop.span)
            lower.append(lo)
            upper.append(hi)
    except Exception as e:
        handle_error(e, __name__)
    return RepetitionSpace(counters=program.repetition_counters,
                           lower=tuple(lower), upper=tuple(upper))


def analyze(program: Program) -> List[ArrayReference]:
    """References of program with their Jacobians."""
    refs = extract_references(program)
    try:
        return [jacobians(ref, program) for ref in refs]
    except Exception as e:
        handle_error(e, __name__)
