#!/usr/bin/python3
"""
Pretty-printer for the loop-nest language.

The output parses back to an equal tree. Array accesses can be replaced
on the fly by passing an access renderer, which is how rewritten programs
are produced.
"""
from typing import Callable, List, Optional, Sequence
from areole.front.ast import (
    Access, Assign, BinOp, IntLit, Name, Neg, Program
)

AccessRenderer = Callable[[int, Access], str]

INDENT = "    "
_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}
_ATOM = 4


def _precedence(expr) -> int:
    if isinstance(expr, BinOp):
        return _PRECEDENCE[expr.op]
    if isinstance(expr, Neg):
        return 3
    return _ATOM


class _Printer:
    """Renders a program, numbering accesses in textual order."""

    def __init__(self, render_access: Optional[AccessRenderer] = None):
        self.render_access = render_access
        self.access_index = 0
        self.lines: List[str] = []

    def expr(self, expr) -> str:
        if isinstance(expr, IntLit):
            return str(expr.value)
        if isinstance(expr, Name):
            return expr.name
        if isinstance(expr, Access):
            index = self.access_index
            self.access_index += 1
            if self.render_access is not None:
                return self.render_access(index, expr)
            return expr.array + "".join(
                f"[{self.expr(s)}]" for s in expr.subscripts)
        if isinstance(expr, Neg):
            inner = self.expr(expr.operand)
            if _precedence(expr.operand) < _ATOM:
                inner = f"({inner})"
            return f"-{inner}"
        prec = _PRECEDENCE[expr.op]
        left = self.expr(expr.left)
        if _precedence(expr.left) < prec:
            left = f"({left})"
        right = self.expr(expr.right)
        if _precedence(expr.right) <= prec or isinstance(expr.right, Neg):
            right = f"({right})"
        return f"{left} {expr.op} {right}"

    def statement(self, stmt, depth: int) -> None:
        pad = INDENT * depth
        if isinstance(stmt, Assign):
            target = self.expr(stmt.target)
            self.lines.append(
                f"{pad}{target} {stmt.op} {self.expr(stmt.value)};")
            return
        cmp = "<=" if stmt.inclusive else "<"
        c = stmt.counter
        self.lines.append(
            f"{pad}for ({c} = {self.expr(stmt.lower)}; "
            f"{c} {cmp} {self.expr(stmt.upper)}; {c}++) {{")
        for inner in stmt.body:
            self.statement(inner, depth + 1)
        self.lines.append(pad + "}")

    def program(self, program: Program, comments: Sequence[str]) -> str:
        self.lines.extend(f"// {c}" if c else "//" for c in comments)
        if program.params:
            self.lines.append(f"param {', '.join(program.params)};")
        if program.repetition_counters:
            self.lines.append(
                f"@repetition({', '.join(program.repetition_counters)})")
        args = ", ".join(
            f"{a.name}{'[]' * a.rank} : "
            f"{'in' if a.direction == 'input' else 'out'}"
            for a in program.arrays)
        self.lines.append(f"func {program.name}({args}) {{")
        for stmt in program.body:
            self.statement(stmt, 1)
        self.lines.append("}")
        return "\n".join(self.lines) + "\n"


def render_expression(expr) -> str:
    """Source text of a single expression."""
    return _Printer().expr(expr)


def render_program(program: Program,
                   render_access: Optional[AccessRenderer] = None,
                   comments: Sequence[str] = ()) -> str:
    """
    Source text of a program.

    Args:
        program (Program): The tree to print.
        render_access: Called as render_access(index, access) for every
        array access, index counting accesses in the order of
        iter_accesses; its result replaces the access text.
        comments: Lines emitted as // comments before the program.
    """
    return _Printer(render_access).program(program, comments)
