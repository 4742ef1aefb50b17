#!/usr/bin/python3
import os
import unittest
from areole.front.ast import (
    Access, ArrayDecl, Assign, BinOp, ForLoop, IntLit, Name, Neg
)
from areole.front.parser import parse
from areole.front.printer import render_expression, render_program
from areole.utils.exceptions import (
        DSLSyntaxError, RepetitionPragmaError, UnknownIdentifierError,
        UnsupportedConstructError
        )

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(name: str) -> str:
    with open(os.path.join(FIXTURES, name), encoding="utf-8") as f:
        return f.read()


def wrap(body: str, header: str = "x[] : in, y[] : out",
         pragma: str = "@repetition(i)", params: str = "") -> str:
    return (f"{params}\n{pragma}\nfunc f({header}) {{\n"
            f"for (i = 0; i < 4; i++) {{\n{body}\n}}\n}}\n")


class TestParse(unittest.TestCase):
    def test_correlation_kernel(self):
        program = parse(fixture("mytc.aol"))
        self.assertEqual(program.name, "myTE")
        self.assertEqual(program.repetition_counters, ("i",))
        self.assertEqual(program.arrays, (
            ArrayDecl(name="in", rank=2, direction="input"),
            ArrayDecl(name="out", rank=2, direction="output")))
        self.assertEqual(program.scalars, ("S",))
        self.assertEqual([lp.counter for lp in program.loops()],
                         ["i", "k", "j"])

    def test_expression_tree(self):
        """Products bind tighter than sums; unary minus tighter still."""
        program = parse(wrap("y[i] = x[-i + 2 * i];"))
        assign = program.body[0].body[0]
        self.assertIsInstance(assign, Assign)
        sub = assign.value.subscripts[0]
        self.assertEqual(sub, BinOp(
            op="+", left=Neg(operand=Name(name="i")),
            right=BinOp(op="*", left=IntLit(value=2),
                        right=Name(name="i"))))

    def test_left_associative(self):
        program = parse(wrap("y[i - 1 - 2] = x[i];"))
        target = program.body[0].body[0].target
        self.assertEqual(target.subscripts[0], BinOp(
            op="-", left=BinOp(op="-", left=Name(name="i"),
                               right=IntLit(value=1)),
            right=IntLit(value=2)))

    def test_inclusive_bound_and_single_statement_body(self):
        program = parse(
            "func f(x[] : in) {\n"
            "    for (i = 0; i <= 3; i++) S = x[i];\n"
            "}\n")
        loop = program.body[0]
        self.assertIsInstance(loop, ForLoop)
        self.assertTrue(loop.inclusive)
        self.assertEqual(len(loop.body), 1)

    def test_comments_ignored(self):
        program = parse("/* block */ func f(x[] : in) { // line\n"
                        "S = x[0]; }")
        self.assertEqual(program.body[0].value,
                         Access(array="x", subscripts=(IntLit(value=0),)))

    def test_parameters(self):
        program = parse(wrap("y[i] = x[N * i + M];", params="param N, M;"))
        self.assertEqual(program.params, ("N", "M"))

    def test_syntax_error_location(self):
        with self.assertRaises(DSLSyntaxError) as ctx:
            parse("func f(x[] : in) {\n    S = x[0]\n}\n")
        self.assertEqual(ctx.exception.code, "E_SYNTAX")
        self.assertIsNotNone(ctx.exception.location)

    def test_wrong_increment(self):
        with self.assertRaises(DSLSyntaxError):
            parse("func f(x[] : in) {\n"
                  "    for (i = 0; i < 3; j++) { S = x[i]; }\n}\n")

    def test_unknown_identifier(self):
        with self.assertRaises(UnknownIdentifierError) as ctx:
            parse(wrap("y[i] = x[i + K];"))
        self.assertEqual(ctx.exception.name, "K")
        self.assertEqual(ctx.exception.location[0], 5)

    def test_counter_out_of_scope(self):
        with self.assertRaises(UnknownIdentifierError):
            parse(wrap("for (j = 0; j < 2; j++) { S = x[j]; }\n"
                       "y[i] = x[j];"))

    def test_indirection(self):
        with self.assertRaises(UnsupportedConstructError):
            parse(wrap("y[i] = x[x[i]];"))

    def test_bare_array(self):
        with self.assertRaises(UnsupportedConstructError):
            parse(wrap("y[i] = x;"))

    def test_shadowing_counter(self):
        with self.assertRaises(UnsupportedConstructError):
            parse(wrap("for (i = 0; i < 2; i++) { y[i] = x[i]; }"))

    def test_duplicate_array(self):
        with self.assertRaises(UnsupportedConstructError):
            parse(wrap("y[i] = x[i];", header="x[] : in, x[] : out"))

    def test_repetition_unknown_loop(self):
        with self.assertRaises(RepetitionPragmaError):
            parse(wrap("y[i] = x[i];", pragma="@repetition(i, k)"))

    def test_repetition_not_outermost(self):
        with self.assertRaises(RepetitionPragmaError):
            parse(wrap("for (k = 0; k < 2; k++) { y[k] = x[i]; }",
                       pragma="@repetition(k)"))

    def test_repetition_repeated(self):
        with self.assertRaises(RepetitionPragmaError):
            parse(wrap("y[i] = x[i];", pragma="@repetition(i, i)"))


class TestPrinter(unittest.TestCase):
    def test_round_trip_fixtures(self):
        """Printing then parsing gives back an equal tree."""
        for name in sorted(os.listdir(FIXTURES)):
            with self.subTest(fixture=name):
                program = parse(fixture(name))
                self.assertEqual(parse(render_program(program)), program)

    def test_parentheses(self):
        expr = BinOp(op="*", left=BinOp(op="+", left=Name(name="a"),
                                        right=Name(name="b")),
                     right=Neg(operand=IntLit(value=2)))
        self.assertEqual(render_expression(expr), "(a + b) * (-2)")
        expr = BinOp(op="-", left=Name(name="a"),
                     right=BinOp(op="-", left=Name(name="b"),
                                 right=Name(name="c")))
        self.assertEqual(render_expression(expr), "a - (b - c)")

    def test_layout(self):
        text = render_program(parse(fixture("copy.aol")))
        self.assertEqual(text.splitlines()[:3], [
            "@repetition(i, k)",
            "func copy(in[][] : in, out[][] : out) {",
            "    for (i = 0; i < 4; i++) {"])
        self.assertIn("            out[i][k] = in[i][k];", text)

    def test_access_renderer(self):
        seen = []

        def render(index, access):
            seen.append((index, access.array))
            return f"p{index}[0]"

        text = render_program(parse(fixture("copy.aol")), render,
                              comments=["rewritten"])
        self.assertEqual(seen, [(0, "out"), (1, "in")])
        self.assertTrue(text.startswith("// rewritten\n"))
        self.assertIn("p0[0] = p1[0];", text)


if __name__ == "__main__":
    unittest.main()
