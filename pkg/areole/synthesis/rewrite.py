#!/usr/bin/python3
"""
Rewriting of the elementary transform in pattern coordinates.

Each access A[e_1]...[e_n] of reference k is replaced by an access to its
channel's pattern, A_ch<n>[phi_k(j)]. The function header declares the
patterns instead of the arrays, so the result is again a valid program.
"""
from typing import Dict, List, Sequence, Tuple
from areole.front.ast import (
    Access, ArrayDecl, BinOp, IntLit, Name, Neg, Program
)
from areole.front.printer import render_expression, render_program
from areole.synthesis.models.channel_model import Channel, PatternAccess


def _term(coeff: int, counter: str):
    name = Name(name=counter)
    return name if abs(coeff) == 1 else \
        BinOp(op="*", left=IntLit(value=abs(coeff)), right=name)


def affine_node(coeffs: Sequence[int], counters: Sequence[str],
                constant: int):
    """Expression tree of sum(coeffs * counters) + constant."""
    parts: List[Tuple[int, object]] = [
        (c, _term(c, x)) for c, x in zip(coeffs, counters) if c]
    if constant or not parts:
        parts.append((constant, IntLit(value=abs(constant))))
    sign, node = parts[0]
    if sign < 0:
        node = Neg(operand=node)
    for sign, term in parts[1:]:
        node = BinOp(op="-" if sign < 0 else "+", left=node, right=term)
    return node


def pattern_subscripts(phi: PatternAccess,
                       counters: Sequence[str]) -> List[str]:
    """Subscript texts of phi; a zero-dimensional pattern reads cell 0."""
    if phi.matrix.rows == 0:
        return ["0"]
    return [render_expression(affine_node(phi.matrix.row(i), counters, s))
            for i, s in enumerate(phi.shift)]


def _matrix_text(rows: List[List[int]]) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in r) for r in rows) + "]"


def channel_comments(ch: Channel) -> List[str]:
    refs = ", ".join(ref.label for ref in ch.refs)
    return [
        f"channel {ch.name}: {refs} ({ch.strategy})",
        f"  paving {_matrix_text(ch.paving.to_rows())}, origin "
        f"{list(ch.paving_origin)}",
        f"  fitting {_matrix_text(ch.fitting.to_rows())}, pattern "
        f"{list(ch.pattern_sizes)}",
    ]


def rewrite_program(program: Program, channels: Sequence[Channel]) -> str:
    """
    Source text of program with every access rewritten to its pattern.

    Args:
        program (Program): The analysed program.
        channels: Channels covering every array reference.

    Raises:
        KeyError: If an access belongs to no channel.
    """
    placement: Dict[int, Tuple[Channel, int]] = {}
    for ch in channels:
        for k, ref in enumerate(ch.refs):
            placement[ref.index] = (ch, k)

    def render(index: int, access: Access) -> str:
        ch, k = placement[index]
        subs = pattern_subscripts(ch.rewritten[k], ch.refs[k].inner_counters)
        return ch.name + "".join(f"[{s}]" for s in subs)

    patterns = tuple(ArrayDecl(name=ch.name, rank=max(ch.pattern_dim, 1),
                               direction=ch.array.direction)
                     for ch in sorted(channels,
                                      key=lambda c: c.refs[0].index))
    comments = [line for ch in channels for line in channel_comments(ch)]
    return render_program(program.model_copy(update=dict(arrays=patterns)),
                          render, comments)
