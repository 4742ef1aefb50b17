#!/usr/bin/python3
"""
Iteration domains of the inner loops enclosing a reference.

Three shapes give vertices: rectangular boxes, convex polyhedra given by
affine inequalities, and boxes supplied by the user. Loop nests whose
bounds are not affine have no computable vertices; they can still be
enumerated point by point once a user box stands in for their vertices.
"""
import itertools
from typing import Iterator, List, Mapping, Optional, Sequence, Tuple
import sympy
from areole.config import Config
from areole.exact.matrix import IntMatrix
from areole.exact.rational import RatVector, rational_solve
from areole.front.affine import AffineExpr, as_int, bind, symbol
from areole.utils.exceptions import (
        AffinityViolation, BudgetExceededError, DimensionMismatchError,
        UnboundedDomainError, UnderdeterminedSystemError
        )
from areole.utils.logger import get_logger

logger = get_logger(__name__)

Range = Tuple[int, int]
Point = Tuple[int, ...]
Bindings = Mapping[str, int]


def _guard(ranges: Sequence[Range], what: str) -> None:
    estimate = 1
    for lo, hi in ranges:
        estimate *= max(hi - lo + 1, 0)
    budget = Config.get_int('AREOLE_ENUMERATION_BUDGET')
    if estimate > budget:
        raise BudgetExceededError(what, estimate, budget)


def _corners(ranges: Sequence[Range]) -> List[RatVector]:
    if any(lo > hi for lo, hi in ranges):
        return []
    return sorted({RatVector(c) for c in itertools.product(
        *(sorted({lo, hi}) for lo, hi in ranges))})


class IterationDomain:
    """
    A finite set of integer points over named counters.

    Attributes:
        counters (Tuple[str, ...]): The inner loop counters, outer first.
    """
    kind = "domain"

    def __init__(self, counters: Sequence[str]):
        self.counters = tuple(counters)

    @property
    def dim(self) -> int:
        return len(self.counters)

    @property
    def parameters(self) -> Tuple[str, ...]:
        return ()

    def vertices(self, bindings: Bindings = None) -> List[RatVector]:
        raise NotImplementedError

    def points(self, bindings: Bindings = None) -> Iterator[Point]:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.counters}"


class BoxDomain(IterationDomain):
    """
    Rectangular domain: lower[t] <= j_t <= upper[t], bounds free of loop
    counters (they may involve parameters).
    """
    kind = "box"

    def __init__(self, counters: Sequence[str], lower: Sequence,
                 upper: Sequence):
        super().__init__(counters)
        if not (len(lower) == len(upper) == len(self.counters)):
            raise DimensionMismatchError(
                f"{len(lower)} lower and {len(upper)} upper bounds for "
                f"{len(self.counters)} counters.")
        self.lower = tuple(AffineExpr(b) for b in lower)
        self.upper = tuple(AffineExpr(b) for b in upper)

    @property
    def parameters(self) -> Tuple[str, ...]:
        names = set()
        for b in self.lower + self.upper:
            names.update(b.parameters)
        return tuple(sorted(names))

    def ranges(self, bindings: Bindings = None) -> List[Range]:
        """Inclusive integer range per counter."""
        return [(as_int(lo.expr, bindings, "lower bound"),
                 as_int(hi.expr, bindings, "upper bound"))
                for lo, hi in zip(self.lower, self.upper)]

    def is_empty(self, bindings: Bindings = None) -> bool:
        return any(lo > hi for lo, hi in self.ranges(bindings))

    def vertices(self, bindings: Bindings = None) -> List[RatVector]:
        return _corners(self.ranges(bindings))

    def points(self, bindings: Bindings = None) -> Iterator[Point]:
        ranges = self.ranges(bindings)
        _guard(ranges, f"box domain over {self.counters}")
        return itertools.product(*(range(lo, hi + 1) for lo, hi in ranges))

    def to_poly(self) -> "PolyDomain":
        """The same box as 2 * dim inequalities."""
        constraints = []
        for c, lo, hi in zip(self.counters, self.lower, self.upper):
            constraints.append(symbol(c) - lo.expr)
            constraints.append(hi.expr - symbol(c))
        return PolyDomain(self.counters, constraints)


class PolyDomain(IterationDomain):
    """
    Convex polyhedral domain {j : a_i . j + c_i >= 0 for all i}.

    Vertices are found by solving every dim-subset of the inequalities as
    equalities and keeping the feasible solutions, which is exact and
    affordable for the small loop nests handled here (limits
    AREOLE_MAX_HPOLY_DIM and AREOLE_MAX_HPOLY_CONSTRAINTS).
    """
    kind = "hpoly"

    def __init__(self, counters: Sequence[str], constraints: Sequence):
        super().__init__(counters)
        self.constraints = tuple(
            AffineExpr(c.expr if isinstance(c, AffineExpr) else c,
                       self.counters)
            for c in constraints)

    @property
    def parameters(self) -> Tuple[str, ...]:
        names = set()
        for c in self.constraints:
            names.update(c.parameters)
        return tuple(sorted(names))

    def instantiate(self, bindings: Bindings = None
                    ) -> Tuple[IntMatrix, Tuple[int, ...]]:
        """Normals as the rows of A and the constants c."""
        rows, consts = [], []
        for c in self.constraints:
            coeffs, const = c.instantiate(bindings)
            rows.append(coeffs)
            consts.append(const)
        return IntMatrix.from_rows(rows, self.dim), tuple(consts)

    def contains(self, point: Sequence, normals: IntMatrix,
                 consts: Sequence[int]) -> bool:
        return all(v + c >= 0 for v, c in zip(normals.apply(point), consts))

    def _check_limits(self) -> None:
        max_dim = Config.get_int('AREOLE_MAX_HPOLY_DIM')
        max_constraints = Config.get_int('AREOLE_MAX_HPOLY_CONSTRAINTS')
        if self.dim > max_dim or len(self.constraints) > max_constraints:
            raise UnboundedDomainError(
                f"Polyhedral domain with {len(self.constraints)} "
                f"inequalities in dimension {self.dim} exceeds the vertex "
                f"enumeration limits ({max_constraints}, {max_dim}).")

    def _in_cone(self, normals: IntMatrix, target: Sequence[int]) -> bool:
        """Is target a nonnegative combination of the rows of normals?"""
        for size in range(1, min(normals.rows, self.dim) + 1):
            for subset in itertools.combinations(range(normals.rows), size):
                system = IntMatrix.from_columns(
                    [normals.row(i) for i in subset], self.dim)
                try:
                    weights = rational_solve(system, target)
                except UnderdeterminedSystemError:
                    continue
                if weights is not None and all(w >= 0 for w in weights):
                    return True
        return False

    def is_bounded(self, bindings: Bindings = None) -> bool:
        """
        Check each axis: the domain is bounded iff both +e_t and -e_t are
        nonnegative combinations of the constraint normals.
        """
        normals, _ = self.instantiate(bindings)
        for t in range(self.dim):
            for sign in (1, -1):
                axis = [sign if i == t else 0 for i in range(self.dim)]
                if not self._in_cone(normals, axis):
                    logger.debug("Domain %s is unbounded along %s%s.",
                                 self.counters, "+-"[sign < 0],
                                 self.counters[t])
                    return False
        return True

    def vertices(self, bindings: Bindings = None) -> List[RatVector]:
        """
        Raises:
            UnboundedDomainError: If a recession direction exists or the
            domain exceeds the enumeration limits.
        """
        self._check_limits()
        if self.dim == 0:
            return [RatVector(())]
        if not self.is_bounded(bindings):
            raise UnboundedDomainError(
                f"Iteration domain over {self.counters} is unbounded.")
        normals, consts = self.instantiate(bindings)
        found = set()
        for subset in itertools.combinations(range(normals.rows), self.dim):
            system = IntMatrix.from_rows(
                [normals.row(i) for i in subset], self.dim)
            try:
                x = rational_solve(system, [-consts[i] for i in subset])
            except UnderdeterminedSystemError:
                continue
            if x is not None and self.contains(x, normals, consts):
                found.add(x)
        return sorted(found)

    def points(self, bindings: Bindings = None) -> Iterator[Point]:
        verts = self.vertices(bindings)
        if not verts:
            return iter(())
        normals, consts = self.instantiate(bindings)
        ranges = [(min(v.floor()[t] for v in verts),
                   max(v.ceil()[t] for v in verts)) for t in range(self.dim)]
        _guard(ranges, f"polyhedral domain over {self.counters}")
        return (p for p in itertools.product(
            *(range(lo, hi + 1) for lo, hi in ranges))
            if self.contains(p, normals, consts))


class LoopNestDomain(IterationDomain):
    """
    Domain of a loop nest with arbitrary bounds.

    Bounds are sympy expressions in the parameters and the enclosing
    counters of the nest; upper bounds are inclusive. No vertices can be
    derived, but the points are enumerated by running the nest.
    """
    kind = "loopnest"

    def __init__(self, counters: Sequence[str], lower: Sequence,
                 upper: Sequence):
        super().__init__(counters)
        self.lower = tuple(sympy.sympify(b) for b in lower)
        self.upper = tuple(sympy.sympify(b) for b in upper)

    @property
    def parameters(self) -> Tuple[str, ...]:
        names = {s.name for b in self.lower + self.upper
                 for s in b.free_symbols}
        return tuple(sorted(names - set(self.counters)))

    def vertices(self, bindings: Bindings = None) -> List[RatVector]:
        raise UnboundedDomainError(
            f"Vertices of the loop nest over {self.counters} cannot be "
            "computed: its bounds are not affine.")

    def points(self, bindings: Bindings = None) -> Iterator[Point]:
        budget = Config.get_int('AREOLE_ENUMERATION_BUDGET')
        produced = 0
        for point in self._walk(0, dict(bindings or {})):
            produced += 1
            if produced > budget:
                raise BudgetExceededError(
                    f"loop nest over {self.counters}", produced, budget)
            yield point

    def _walk(self, depth: int, values: dict) -> Iterator[Point]:
        if depth == self.dim:
            yield tuple(values[c] for c in self.counters)
            return
        lo = as_int(bind(self.lower[depth], values), None, "lower bound")
        hi = as_int(bind(self.upper[depth], values), None, "upper bound")
        for v in range(lo, hi + 1):
            values[self.counters[depth]] = v
            yield from self._walk(depth + 1, values)
        values.pop(self.counters[depth], None)


class UserBoxDomain(IterationDomain):
    """
    Box given by the user for a reference whose vertices are not
    computable. The exact domain, when known, still provides the points.
    """
    kind = "userbox"

    def __init__(self, counters: Sequence[str], ranges: Sequence[Range],
                 exact: Optional[IterationDomain] = None):
        super().__init__(counters)
        if len(ranges) != len(self.counters):
            raise DimensionMismatchError(
                f"User box has {len(ranges)} ranges for "
                f"{len(self.counters)} counters {self.counters}.")
        self.ranges = tuple((int(lo), int(hi)) for lo, hi in ranges)
        self.exact = exact

    @property
    def parameters(self) -> Tuple[str, ...]:
        return self.exact.parameters if self.exact is not None else ()

    def vertices(self, bindings: Bindings = None) -> List[RatVector]:
        return _corners(self.ranges)

    def points(self, bindings: Bindings = None) -> Iterator[Point]:
        if self.exact is None:
            _guard(self.ranges, f"user box over {self.counters}")
            yield from itertools.product(
                *(range(lo, hi + 1) for lo, hi in self.ranges))
            return
        for p in self.exact.points(bindings):
            if not all(lo <= x <= hi for x, (lo, hi) in zip(p, self.ranges)):
                raise UnboundedDomainError(
                    f"Point {p} of the loop nest lies outside the user box "
                    f"{list(self.ranges)}.")
            yield p


def domain_from_bounds(counters: Sequence[str], lower: Sequence,
                       upper: Sequence) -> IterationDomain:
    """
    Classify a loop nest by its bounds (sympy expressions, upper bounds
    inclusive).

    Returns:
        IterationDomain: A BoxDomain when no bound mentions a counter, a
        PolyDomain when every bound is affine in the outer counters, and
        a LoopNestDomain otherwise.
    """
    names = set(counters)
    lower = [sympy.sympify(b) for b in lower]
    upper = [sympy.sympify(b) for b in upper]
    if not any(names & {s.name for s in b.free_symbols}
               for b in lower + upper):
        return BoxDomain(counters, lower, upper)
    try:
        constraints = []
        for c, lo, hi in zip(counters, lower, upper):
            constraints.append(AffineExpr(symbol(c) - lo, counters))
            constraints.append(AffineExpr(hi - symbol(c), counters))
    except AffinityViolation:
        logger.debug("Loop nest over %s has non-affine bounds.", counters)
        return LoopNestDomain(counters, lower, upper)
    return PolyDomain(counters, constraints)
