#!/usr/bin/python3
"""
Parser for the loop-nest language.

A compilation unit declares its parameters, names the repetition loops
and holds one function:

    param N;
    @repetition(i)
    func myTE(in[][] : in, out[][] : out) {
        for (i = 0; i < 7; i++) { ... }
    }

The grammar (see docs/grammar.ebnf) is built once with pyparsing; the
semantic checks that need the whole tree run afterwards in parse().
"""
from typing import List, NamedTuple, Optional, Sequence, Set, Tuple
import pyparsing as pp
from areole.front.ast import (
    Access, ArrayDecl, Assign, BinOp, ForLoop, IntLit, Name, Neg, Program,
    walk_expression
)
from areole.utils.error_handler import handle_error
from areole.utils.exceptions import (
        DSLSyntaxError, RepetitionPragmaError, UnknownIdentifierError,
        UnsupportedConstructError
        )
from areole.utils.logger import get_logger

logger = get_logger(__name__)

pp.ParserElement.enable_packrat()


class _Params(NamedTuple):
    names: Tuple[str, ...]


class _Pragma(NamedTuple):
    counters: Tuple[str, ...]
    span: Tuple[int, int]


class _Header(NamedTuple):
    name: str
    arrays: Tuple[ArrayDecl, ...]


def _span(s: str, loc: int) -> Tuple[int, int]:
    return pp.lineno(loc, s), pp.col(loc, s)


def _fold_binary(s, loc, toks):
    items = toks[0]
    node = items[0]
    for op, right in zip(items[1::2], items[2::2]):
        node = BinOp(op=op, left=node, right=right, span=_span(s, loc))
    return node


def _fold_unary(s, loc, toks):
    return Neg(operand=toks[0][1], span=_span(s, loc))


def _make_for(s, loc, toks):
    counter, lower, test_var, cmp, upper, step_var, body = toks
    if test_var != counter or step_var != counter:
        raise pp.ParseFatalException(
            s, loc, f"loop on '{counter}' must test and increment "
            f"'{counter}'")
    return ForLoop(counter=counter, lower=lower, upper=upper,
                   inclusive=(cmp == "<="), body=tuple(body),
                   span=_span(s, loc))


def _setup():
    LPAR, RPAR, LBRACK, RBRACK, LBRACE, RBRACE, SEMI, COMMA, COLON = \
        map(pp.Suppress, "()[]{};,:")
    FOR, FUNC, PARAM = (pp.Keyword(k) for k in ("for", "func", "param"))

    identifier = ~(FOR | FUNC | PARAM) + pp.Word(
        pp.alphas + "_", pp.alphanums + "_")
    integer = pp.Word(pp.nums).set_parse_action(
        lambda s, loc, t: IntLit(value=int(t[0]), span=_span(s, loc)))
    name = identifier.copy().set_parse_action(
        lambda s, loc, t: Name(name=t[0], span=_span(s, loc)))

    expression = pp.Forward()
    access = (identifier + pp.Group(pp.OneOrMore(
        LBRACK + expression + RBRACK))).set_parse_action(
        lambda s, loc, t: Access(array=t[0], subscripts=tuple(t[1]),
                                 span=_span(s, loc)))
    operand = integer | access | name
    expression <<= pp.infix_notation(operand, [
        (pp.Literal("-"), 1, pp.OpAssoc.RIGHT, _fold_unary),
        (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_binary),
        (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold_binary),
    ])

    statement = pp.Forward()
    block = LBRACE + pp.ZeroOrMore(statement) + RBRACE

    assignment = ((access | name) + pp.one_of("= += -= *=") + expression
                  + SEMI).set_parse_action(
        lambda s, loc, t: Assign(target=t[0], op=t[1], value=t[2],
                                 span=_span(s, loc)))
    for_loop = (FOR.suppress() + LPAR
                + identifier + pp.Suppress("=") + expression + SEMI
                + identifier + pp.one_of("< <=") + expression + SEMI
                + identifier + pp.Suppress("++") + RPAR
                + pp.Group(block | statement)).set_parse_action(_make_for)
    statement <<= for_loop | assignment | block

    direction = pp.Keyword("in") | pp.Keyword("out")
    array_arg = (identifier
                 + pp.Group(pp.OneOrMore(pp.Group(LBRACK + RBRACK)))
                 + COLON + direction).set_parse_action(
        lambda t: ArrayDecl(
            name=t[0], rank=len(t[1]),
            direction="input" if t[2] == "in" else "output"))
    header = (FUNC.suppress() + identifier + LPAR
              + pp.Group(pp.Optional(
                  array_arg + pp.ZeroOrMore(COMMA + array_arg)))
              + RPAR).set_parse_action(
        lambda t: _Header(name=t[0], arrays=tuple(t[1])))

    param_decl = (PARAM.suppress() + identifier
                  + pp.ZeroOrMore(COMMA + identifier)
                  + SEMI).set_parse_action(
        lambda t: _Params(names=tuple(t)))
    repetition = (pp.Suppress("@repetition") + LPAR + identifier
                  + pp.ZeroOrMore(COMMA + identifier)
                  + RPAR).set_parse_action(
        lambda s, loc, t: _Pragma(counters=tuple(t), span=_span(s, loc)))

    program = (pp.ZeroOrMore(param_decl) + pp.Optional(repetition)
               + header + pp.Group(block))
    program.ignore(pp.cpp_style_comment)
    return program


PARSER = _setup()


def _check_expression(expr, known: Set[str], arrays: Set[str],
                      in_subscript: bool = False) -> None:
    if isinstance(expr, Name):
        if expr.name in arrays:
            raise UnsupportedConstructError(
                f"Array '{expr.name}' used without subscripts.", expr.span)
        if expr.name not in known:
            raise UnknownIdentifierError(expr.name, expr.span)
    elif isinstance(expr, Access):
        if in_subscript:
            raise UnsupportedConstructError(
                f"Indirect access through '{expr.array}' is outside the "
                "polytope model.", expr.span)
        for sub in expr.subscripts:
            _check_expression(sub, known, arrays, True)
    elif isinstance(expr, BinOp):
        _check_expression(expr.left, known, arrays, in_subscript)
        _check_expression(expr.right, known, arrays, in_subscript)
    elif isinstance(expr, Neg):
        _check_expression(expr.operand, known, arrays, in_subscript)


def _check_bound(expr, known: Set[str], arrays: Set[str]) -> None:
    for node in walk_expression(expr):
        if isinstance(node, Access):
            raise UnsupportedConstructError(
                "Array accesses are not allowed in loop bounds.", node.span)
    _check_expression(expr, known, arrays)


def _check_body(body, scope: Tuple[str, ...], globals_: Set[str],
                arrays: Set[str]) -> None:
    for stmt in body:
        known = globals_ | set(scope)
        if isinstance(stmt, ForLoop):
            if stmt.counter in known or stmt.counter in arrays:
                raise UnsupportedConstructError(
                    f"Loop counter '{stmt.counter}' shadows another name.",
                    stmt.span)
            _check_bound(stmt.lower, known, arrays)
            _check_bound(stmt.upper, known, arrays)
            _check_body(stmt.body, scope + (stmt.counter,), globals_,
                        arrays)
        else:
            _check_expression(stmt.target, known, arrays)
            _check_expression(stmt.value, known, arrays)


def _check_repetition(program: Program, span) -> None:
    chain = program.repetition_counters
    if len(set(chain)) != len(chain):
        raise RepetitionPragmaError(
            f"Repeated counter in @repetition{chain}.", span)
    loops = {}
    for loop, enclosing in _loops_with_enclosing(program.body):
        loops.setdefault(loop.counter, []).append(enclosing)
    for depth, counter in enumerate(chain):
        found = loops.get(counter, [])
        if not found:
            raise RepetitionPragmaError(
                f"@repetition names '{counter}' but no loop uses it.", span)
        if len(found) > 1:
            raise RepetitionPragmaError(
                f"Counter '{counter}' names {len(found)} loops.", span)
        if found[0] != chain[:depth]:
            raise RepetitionPragmaError(
                f"Repetition loop '{counter}' must be nested directly in "
                f"{list(chain[:depth]) or 'the function body'}.", span)


def _loops_with_enclosing(body, enclosing: Tuple[str, ...] = ()):
    for stmt in body:
        if isinstance(stmt, ForLoop):
            yield stmt, enclosing
            yield from _loops_with_enclosing(
                stmt.body, enclosing + (stmt.counter,))


def _assemble(tokens: Sequence) -> Tuple[Program, Optional[_Pragma]]:
    params: List[str] = []
    pragma = None
    header = None
    body = ()
    for tok in tokens:
        if isinstance(tok, _Params):
            params.extend(tok.names)
        elif isinstance(tok, _Pragma):
            pragma = tok
        elif isinstance(tok, _Header):
            header = tok
        else:
            body = tuple(tok)
    program = Program(
        name=header.name, params=tuple(params),
        repetition_counters=pragma.counters if pragma else (),
        arrays=header.arrays, body=body)
    return program, pragma


def parse(source: str) -> Program:
    """
    Parse and check a compilation unit.

    Args:
        source (str): The program text.

    Returns:
        Program: The checked syntax tree.

    Raises:
        DSLSyntaxError: If the text does not follow the grammar.
        UnknownIdentifierError: For names that are neither counters in
        scope, parameters nor scalars.
        RepetitionPragmaError: If @repetition does not name an outermost
        chain of loops.
        UnsupportedConstructError: For indirection and similar constructs.
    """
    try:
        try:
            tokens = PARSER.parse_string(source, parse_all=True)
        except pp.ParseBaseException as e:
            raise DSLSyntaxError(e.msg, e.lineno, e.col)

        program, pragma = _assemble(tokens)
        arrays = [a.name for a in program.arrays]
        for names, what in ((arrays, "array"),
                            (program.params, "parameter")):
            dup = next((n for n in names if names.count(n) > 1), None)
            if dup:
                raise UnsupportedConstructError(
                    f"The {what} '{dup}' is declared twice.")
        clash = set(arrays) & set(program.params)
        if clash:
            raise UnsupportedConstructError(
                f"'{sorted(clash)[0]}' is both an array and a parameter.")

        globals_ = set(program.params) | set(program.scalars)
        _check_body(program.body, (), globals_, set(arrays))
        _check_repetition(program, pragma.span if pragma else None)
    except Exception as e:
        handle_error(e, __name__)

    logger.info("Parsed function '%s': %d arrays, %d loops, repetition %s.",
                program.name, len(program.arrays), len(program.loops()),
                list(program.repetition_counters))
    return program
