#!/usr/bin/python3
"""
Syntax tree of the loop-nest language.

Nodes are frozen pydantic models discriminated by their ``kind`` field.
Source positions are carried in ``span`` but take no part in equality, so
that a tree equals the tree of its pretty-printed text.
"""
from typing import (
    Annotated, Iterator, List, Literal, Optional, Tuple, Union
)
from pydantic import BaseModel, ConfigDict, Field


class Node(BaseModel):
    """Base class of all syntax tree nodes."""
    model_config = ConfigDict(frozen=True)

    span: Optional[Tuple[int, int]] = Field(
        default=None, exclude=True, repr=False,
        description="(line, column) of the node in the source text.")

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and \
            self.model_dump() == other.model_dump()

    def __hash__(self) -> int:
        return hash((type(self).__name__, repr(self.model_dump())))


class IntLit(Node):
    kind: Literal["int"] = "int"
    value: int = Field(..., ge=0, description="Unsigned integer literal.")


class Name(Node):
    kind: Literal["name"] = "name"
    name: str = Field(..., description="Counter, parameter or scalar.")


class Access(Node):
    kind: Literal["access"] = "access"
    array: str = Field(..., description="Name of the accessed array.")
    subscripts: Tuple["Expr", ...] = Field(
        ..., description="One subscript expression per array dimension.")


class BinOp(Node):
    kind: Literal["binop"] = "binop"
    op: Literal["+", "-", "*", "/"]
    left: "Expr"
    right: "Expr"


class Neg(Node):
    kind: Literal["neg"] = "neg"
    operand: "Expr"


Expr = Annotated[
    Union[IntLit, Name, Access, BinOp, Neg], Field(discriminator="kind")]


class Assign(Node):
    kind: Literal["assign"] = "assign"
    target: Annotated[Union[Name, Access], Field(discriminator="kind")]
    op: Literal["=", "+=", "-=", "*="]
    value: Expr


class ForLoop(Node):
    """
    ``for (counter = lower; counter < upper; counter++)``, or ``<=`` when
    inclusive is set.
    """
    kind: Literal["for"] = "for"
    counter: str
    lower: Expr
    upper: Expr
    inclusive: bool = False
    body: Tuple["Stmt", ...] = ()


Stmt = Annotated[Union[Assign, ForLoop], Field(discriminator="kind")]


class ArrayDecl(BaseModel):
    """
    Array named in the function header.

    Attributes:
        name (str): Array identifier.
        rank (int): Number of dimensions |A|.
        direction (str): 'input' or 'output'.
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Array identifier.")
    rank: int = Field(..., ge=1, description="Number of dimensions.")
    direction: Literal["input", "output"] = Field(
        ..., description="Whether the array is read or produced.")


class Program(Node):
    """A parsed compilation unit: one function and its annotations."""
    kind: Literal["program"] = "program"
    name: str
    params: Tuple[str, ...] = ()
    repetition_counters: Tuple[str, ...] = ()
    arrays: Tuple[ArrayDecl, ...] = ()
    body: Tuple[Stmt, ...] = ()

    def array(self, name: str) -> Optional[ArrayDecl]:
        return next((a for a in self.arrays if a.name == name), None)

    @property
    def scalars(self) -> Tuple[str, ...]:
        """Unsubscripted assignment targets, in first-assignment order."""
        seen: List[str] = []
        for stmt, _ in walk_statements(self.body):
            if isinstance(stmt, Assign) and isinstance(stmt.target, Name) \
                    and stmt.target.name not in seen:
                seen.append(stmt.target.name)
        return tuple(seen)

    def loops(self) -> List[ForLoop]:
        return [s for s, _ in walk_statements(self.body)
                if isinstance(s, ForLoop)]


for _model in (Access, BinOp, Neg, Assign, ForLoop, Program):
    _model.model_rebuild()


def walk_statements(body, enclosing: Tuple[ForLoop, ...] = ()
                    ) -> Iterator[Tuple[Union[Assign, ForLoop],
                                        Tuple[ForLoop, ...]]]:
    """Pre-order walk yielding (statement, enclosing loops outer-first)."""
    for stmt in body:
        yield stmt, enclosing
        if isinstance(stmt, ForLoop):
            yield from walk_statements(stmt.body, enclosing + (stmt,))


def walk_expression(expr) -> Iterator:
    """Pre-order, left-to-right walk of an expression tree."""
    yield expr
    if isinstance(expr, Access):
        for sub in expr.subscripts:
            yield from walk_expression(sub)
    elif isinstance(expr, BinOp):
        yield from walk_expression(expr.left)
        yield from walk_expression(expr.right)
    elif isinstance(expr, Neg):
        yield from walk_expression(expr.operand)


def iter_accesses(program: Program
                  ) -> Iterator[Tuple[Access, Assign, Tuple[ForLoop, ...]]]:
    """
    Array accesses in textual order: in each assignment the target comes
    first, then the right-hand side from left to right.
    """
    for stmt, enclosing in walk_statements(program.body):
        if not isinstance(stmt, Assign):
            continue
        for expr in (stmt.target, stmt.value):
            for node in walk_expression(expr):
                if isinstance(node, Access):
                    yield node, stmt, enclosing
