#!/usr/bin/python3
"""
Pattern and fitting synthesis for one channel.

Three strategies are available:

- general: the references' lattices are combined into
  M = [B1 ... BN (b2 - b1) ... (bN - b1)], factored as
  M = P.[[H, 0], [C, 0]].U, and the fitting matrix is P.[H; C]. Reference k
  reads pattern point U'.iota_k(j), where iota_k puts j in the columns of
  Bk and a 1 in the column of (bk - b1). The pattern dimension is rank M.
- footprint-box: the pattern is the box enclosing the footprints and the
  fitting matrix is the identity.
- domain-iso: for a single reference over a box, the pattern is the
  iteration box and the fitting matrix is B1.

In each case pattern coordinates are shifted to start at 0 and the shift is
folded into the paving origin.
"""
from typing import List, Mapping, Optional, Sequence, Tuple
from areole.echelon.row_echelon import row_echelon
from areole.exact.matrix import IntMatrix, mat_mul
from areole.exact.rational import RatVector
from areole.front.references import ArrayReference, RepetitionSpace
from areole.geometry.domain import BoxDomain
from areole.geometry.footprint import affine_image, bounding_box
from areole.geometry.lattice import IntLattice, combine_lattices
from areole.synthesis.models.channel_model import (
    Channel, PatternAccess, Strategy
)
from areole.utils.error_handler import handle_error
from areole.utils.exceptions import (
        EchelonStepLimitError, ParametricLimitationError, StrategyError
        )
from areole.utils.logger import get_logger

logger = get_logger(__name__)

Bindings = Mapping[str, int]
STRATEGIES = ("general", "footprint-box", "domain-iso")


class _Numeric:
    """Integer data of a group once parameters are bound."""

    def __init__(self, group: Sequence[ArrayReference], bindings: Bindings):
        for ref in group:
            if not ref.is_numeric(bindings):
                missing = sorted(set(ref.parameters) - set(bindings))
                raise ParametricLimitationError(
                    f"Reference {ref.label} depends on unbound "
                    f"parameter(s) {', '.join(missing)}.")
        self.paving = group[0].paving_matrix(bindings)
        self.locals = [ref.local_matrix(bindings) for ref in group]
        self.origins = [ref.origin_vector(bindings) for ref in group]
        self.vertices = [ref.domain.vertices(bindings) for ref in group]
        self.combined = combine_lattices(
            [IntLattice(b, o) for b, o in zip(self.locals, self.origins)]
        ).gens

    def offsets(self) -> List[Tuple[int, ...]]:
        """b_k - b_1 for every reference."""
        first = self.origins[0]
        return [tuple(x - y for x, y in zip(o, first)) for o in self.origins]


def _boxed(raw: List[Tuple[IntMatrix, Tuple[int, ...]]],
           vertices: List[List[RatVector]], dim: int):
    """
    Bounding box of all vertex images, then maps shifted to start at 0.

    References with an empty domain add no image; when every domain is
    empty the pattern box is empty (all sizes 0).
    """
    images = [affine_image(m, c, v)
              for (m, c), verts in zip(raw, vertices) for v in verts]
    if images:
        box = bounding_box(images)
    else:
        logger.warning("Every iteration domain of the group is empty.")
        box = [(0, -1)] * dim
    lows = tuple(lo for lo, _ in box)
    sizes = tuple(hi - lo + 1 for lo, hi in box)
    maps = tuple(PatternAccess(matrix=m,
                               shift=tuple(x - lo for x, lo in zip(c, lows)))
                 for m, c in raw)
    return lows, sizes, maps


def _general(num: _Numeric, group: Sequence[ArrayReference]):
    ech = row_echelon(num.combined)
    u_prime = ech.u_prime
    q = num.combined.cols
    slots, col = [], 0
    for ref in group:
        slots.append(col)
        col += ref.d

    raw = []
    for k, ref in enumerate(group):
        embed = IntMatrix.from_rows(
            [[1 if i == slots[k] + t else 0 for t in range(ref.d)]
             for i in range(q)], ref.d)
        constant = [0] * q
        if k > 0:
            constant[col + k - 1] = 1
        raw.append((mat_mul(u_prime, embed), u_prime.apply(constant)))

    lows, sizes, maps = _boxed(raw, num.vertices, ech.rank)
    fitting = ech.fitting()
    folded = fitting.apply(lows)
    origin = tuple(b + f for b, f in zip(num.origins[0], folded))
    return fitting, origin, lows, sizes, maps, ech


def _footprint_box(num: _Numeric, group: Sequence[ArrayReference]):
    raw = list(zip(num.locals, num.offsets()))
    lows, sizes, maps = _boxed(raw, num.vertices, group[0].array.rank)
    fitting = IntMatrix.identity(group[0].array.rank)
    origin = tuple(b + lo for b, lo in zip(num.origins[0], lows))
    return fitting, origin, lows, sizes, maps, None


def _domain_iso(num: _Numeric, group: Sequence[ArrayReference],
                bindings: Bindings):
    ref = group[0]
    if len(group) != 1:
        raise StrategyError(
            f"domain-iso needs a single reference; channel of "
            f"{ref.array.name} has {len(group)}.")
    if not isinstance(ref.domain, BoxDomain):
        raise StrategyError(
            f"domain-iso needs a rectangular domain; {ref.label} has a "
            f"{ref.domain.kind} domain.")
    ranges = ref.domain.ranges(bindings)
    if any(lo > hi for lo, hi in ranges):
        raise StrategyError(f"Domain of {ref.label} is empty.")
    lows = tuple(lo for lo, _ in ranges)
    sizes = tuple(hi - lo + 1 for lo, hi in ranges)
    maps = (PatternAccess(matrix=IntMatrix.identity(ref.d),
                          shift=tuple(-lo for lo in lows)),)
    fitting = num.locals[0]
    folded = fitting.apply(lows)
    origin = tuple(b + f for b, f in zip(num.origins[0], folded))
    return fitting, origin, lows, sizes, maps, None


def synthesize(group: Sequence[ArrayReference],
               strategy: Strategy = "general",
               bindings: Optional[Bindings] = None,
               repetition: Optional[RepetitionSpace] = None,
               number: int = 1) -> Channel:
    """
    Build the channel of a group of references sharing a paving matrix.

    The general strategy falls back to footprint-box when the echelon
    computation exceeds AREOLE_ECHELON_STEP_LIMIT.

    Args:
        group: References of one array with equal paving matrices, in
        occurrence order.
        strategy: 'general', 'footprint-box' or 'domain-iso'.
        bindings: Parameter values.
        repetition: The repetition space of the program.
        number: Channel number among the channels of the array.

    Returns:
        Channel: Satisfies paving_origin + F.phi_k(j) = B_k.j + b_k.

    Raises:
        ParametricLimitationError: If an entry stays symbolic.
        StrategyError: If domain-iso does not apply.
        UnboundedDomainError: If a domain has no computable vertices.
    """
    bindings = dict(bindings or {})
    try:
        if strategy not in STRATEGIES:
            raise StrategyError(f"Unknown strategy '{strategy}'.")
        num = _Numeric(group, bindings)
        if strategy == "general":
            try:
                result = _general(num, group)
            except EchelonStepLimitError as e:
                logger.warning("%s; channel of %s falls back to "
                               "footprint-box.", e.message,
                               group[0].array.name)
                strategy = "footprint-box"
                result = _footprint_box(num, group)
        elif strategy == "footprint-box":
            result = _footprint_box(num, group)
        else:
            result = _domain_iso(num, group, bindings)
    except Exception as e:
        handle_error(e, __name__)

    fitting, origin, lows, sizes, maps, ech = result
    channel = Channel(
        number=number, array=group[0].array, refs=tuple(group),
        paving=num.paving, paving_origin=origin,
        repetition=repetition or RepetitionSpace(),
        pattern_sizes=sizes, fitting=fitting,
        pattern_shift=tuple(-lo for lo in lows), rewritten=maps,
        strategy=strategy, combined=num.combined, echelon=ech,
        bindings=bindings)
    logger.info("Channel %s: %d reference(s), strategy %s, pattern %s.",
                channel.name, len(group), strategy, list(sizes))
    return channel


def synthesize_all(groups: Sequence[Sequence[ArrayReference]],
                   strategy: Strategy = "general",
                   bindings: Optional[Bindings] = None,
                   repetition: Optional[RepetitionSpace] = None
                   ) -> List[Channel]:
    """Channels of all groups, numbered per array in group order."""
    numbers = {}
    channels = []
    for group in groups:
        name = group[0].array.name
        numbers[name] = numbers.get(name, 0) + 1
        channels.append(synthesize(group, strategy, bindings, repetition,
                                   numbers[name]))
    return channels
