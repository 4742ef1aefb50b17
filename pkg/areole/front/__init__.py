from .ast import (
    Access,
    ArrayDecl,
    Assign,
    BinOp,
    ForLoop,
    IntLit,
    Name,
    Neg,
    Program
)
from .affine import AffineExpr
from .parser import parse
from .printer import render_expression, render_program
