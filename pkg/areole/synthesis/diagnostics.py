#!/usr/bin/python3
"""
Channel diagnostics: footprint overlap between repetitions, pattern
overhead and the shape of the paving matrix.

Overlap and overhead are decided by exhaustive enumeration, guarded by
AREOLE_ENUMERATION_BUDGET.
"""
from fractions import Fraction
from typing import Dict, Mapping, Optional, Set, Tuple
from areole.config import Config
from areole.exact.matrix import determinant
from areole.synthesis.models.channel_model import Channel
from areole.synthesis.models.diagnostics_model import (
    Diagnostics, OverlapReport
)
from areole.utils.error_handler import handle_error
from areole.utils.exceptions import (
        BudgetExceededError, OutputOverlapError, ParametricLimitationError
        )
from areole.utils.logger import get_logger

logger = get_logger(__name__)

Bindings = Mapping[str, int]
Cell = Tuple[int, ...]


def _budget() -> int:
    return Config.get_int('AREOLE_ENUMERATION_BUDGET')


def footprint_cells(ch: Channel, bindings: Bindings = None) -> Set[Cell]:
    """Cells touched by the channel at r = 0, relative to the paving."""
    bindings = bindings if bindings is not None else ch.bindings
    cells = set()
    budget = _budget()
    for k, ref in enumerate(ch.refs):
        for j in ref.domain.points(bindings):
            cells.add(ch.cell(k, j))
            if len(cells) > budget:
                raise BudgetExceededError(
                    f"footprint of channel {ch.name}", len(cells), budget)
    return cells


def check_overlap(ch: Channel, bindings: Bindings = None) -> OverlapReport:
    """
    Look for two repetitions whose footprints share a cell.

    Raises:
        BudgetExceededError: If |repetitions| x |footprint| exceeds the
        enumeration budget.
        ParametricLimitationError: If the repetition space is symbolic.
    """
    bindings = bindings if bindings is not None else ch.bindings
    try:
        base = footprint_cells(ch, bindings)
        ranges = ch.repetition.ranges(bindings)
        count = 1
        for lo, hi in ranges:
            count *= max(hi - lo + 1, 0)
        budget = _budget()
        if count * len(base) > budget:
            raise BudgetExceededError(
                f"overlap cells of channel {ch.name}", count * len(base),
                budget)

        base_order = sorted(base)
        owner: Dict[Cell, Tuple[int, ...]] = {}
        for r in ch.repetition.points(bindings):
            step = ch.paving.apply(r)
            for cell in base_order:
                moved = tuple(c + s for c, s in zip(cell, step))
                first = owner.setdefault(moved, r)
                if first != r:
                    kind = "output-overlap" if ch.has_write \
                        else "input-overlap"
                    logger.info("Channel %s: %s between %s and %s at %s.",
                                ch.name, kind, first, r, moved)
                    return OverlapReport(kind=kind, first=first, second=r,
                                         cell=moved)
    except Exception as e:
        handle_error(e, __name__)
    logger.info("Channel %s: no overlap.", ch.name)
    return OverlapReport(kind="none")


def overhead(ch: Channel, bindings: Bindings = None
             ) -> Tuple[Fraction, Optional[Fraction]]:
    """
    Share of the pattern box actually used, and its asymptotic value
    1/|det M| when the combined matrix M is square of full rank.

    Raises:
        BudgetExceededError: If the pattern box is too large.
    """
    bindings = bindings if bindings is not None else ch.bindings
    box = 1
    for size in ch.pattern_sizes:
        box *= size
    budget = _budget()
    if box > budget:
        handle_error(BudgetExceededError(
            f"pattern box of channel {ch.name}", box, budget), __name__)

    useful = set()
    for k, ref in enumerate(ch.refs):
        for j in ref.domain.points(bindings):
            useful.add(ch.rewritten[k].apply(j))
    ratio = Fraction(len(useful), box) if useful else None

    asymptotic = None
    if ch.combined.is_square() and ch.combined.rows > 0:
        det = determinant(ch.combined)
        if det != 0:
            asymptotic = Fraction(1, abs(det))
    return ratio, asymptotic


def lint_paving(ch: Channel) -> bool:
    """
    True iff the paving is a permutation of a diagonal matrix, i.e. has at
    most one nonzero entry per row and per column.
    """
    p = ch.paving
    rows_ok = all(sum(1 for x in p.row(i) if x) <= 1 for i in range(p.rows))
    cols_ok = all(sum(1 for x in p.column(j) if x) <= 1
                  for j in range(p.cols))
    return rows_ok and cols_ok


def diagnose(ch: Channel, bindings: Bindings = None,
             overlap: bool = False, strict: bool = False) -> Channel:
    """
    Attach diagnostics to a channel.

    Args:
        overlap: Run the overlap check.
        strict: Make an output overlap an error.

    Raises:
        OutputOverlapError: If strict and the channel writes overlapping
        cells.
    """
    bindings = bindings if bindings is not None else ch.bindings
    report = OverlapReport(kind="unchecked")
    if overlap:
        try:
            report = check_overlap(ch, bindings)
        except (BudgetExceededError, ParametricLimitationError) as e:
            if strict:
                raise
            logger.warning("Overlap of %s not checked: %s", ch.name,
                           e.message)
        if strict and report.kind == "output-overlap":
            handle_error(OutputOverlapError(
                ch.name, report.first, report.second, report.cell),
                __name__)

    ratio = asymptotic = None
    try:
        ratio, asymptotic = overhead(ch, bindings)
    except BudgetExceededError as e:
        logger.warning("Overhead of %s not computed: %s", ch.name,
                       e.message)
    diagnostics = Diagnostics(
        overlap=report, overhead_ratio=ratio,
        overhead_asymptotic=asymptotic, paving_shape_ok=lint_paving(ch))
    return ch.model_copy(update=dict(diagnostics=diagnostics))
