#!/usr/bin/python3
"""
Channels that keep unbound parameters.

The numeric echelon decomposition needs numbers, but a 1x1 or 2x2
combined matrix has a closed-form echelon form over its symbolic entries.
Such channels are reported with that form instead of being rejected.
"""
from typing import List, Sequence
import sympy
from areole.echelon.symbolic import (
    BEZOUT_U, BEZOUT_V, GCD, echelon_1x1_symbolic, echelon_2x2_symbolic
)
from areole.front.references import ArrayReference
from areole.synthesis.models.channel_model import ParametricChannel
from areole.utils.error_handler import handle_error
from areole.utils.exceptions import ParametricLimitationError
from areole.utils.logger import get_logger

logger = get_logger(__name__)


def _strings(m: sympy.MatrixBase) -> List[List[str]]:
    return [[str(e) for e in m.row(i)] for i in range(m.rows)]


def symbolic_combined(group: Sequence[ArrayReference]) -> sympy.Matrix:
    """[B1 ... BN (b2 - b1) ... (bN - b1)] over the parameters."""
    first = group[0].origin
    blocks = [ref.local for ref in group]
    blocks += [ref.origin - first for ref in group[1:]]
    return sympy.Matrix.hstack(*blocks)


def parametric_channel(group: Sequence[ArrayReference]) -> ParametricChannel:
    """
    Closed-form echelon form of a channel with symbolic entries.

    Raises:
        ParametricLimitationError: If the combined matrix is neither 1x1
        nor 2x2.
        DegenerateFormError: If its first row vanishes identically.
    """
    try:
        combined = symbolic_combined(group)
        if combined.shape == (1, 1):
            form = echelon_1x1_symbolic(combined[0, 0])
            conditions = []
        elif combined.shape == (2, 2):
            a, b, c, d = combined
            form = echelon_2x2_symbolic(a, b, c, d).matrix
            conditions = [f"{GCD} = gcd({a}, {b})",
                          f"{a}*{BEZOUT_U} + {b}*{BEZOUT_V} = {GCD}"]
        else:
            raise ParametricLimitationError(
                f"Channel of {group[0].array.name} has a "
                f"{combined.rows}x{combined.cols} combined matrix with "
                "symbolic entries; only 1x1 and 2x2 have a closed form.")
    except Exception as e:
        handle_error(e, __name__)

    logger.info("Parametric channel of %s: echelon form %s.",
                group[0].array.name, _strings(form))
    return ParametricChannel(
        array=group[0].array.name,
        refs=tuple(ref.label for ref in group),
        paving=_strings(group[0].paving),
        combined=_strings(combined),
        echelon_form=_strings(form),
        conditions=conditions)
