#!/usr/bin/python3
import os
import unittest
import sympy
from hypothesis import given, settings, strategies as st
from areole.exact.matrix import IntMatrix
from areole.front.affine import AffineExpr, symbol
from areole.front.parser import parse
from areole.front.references import (
    analyze, extract_references, jacobians, repetition_space
)
from areole.geometry.domain import BoxDomain, LoopNestDomain, PolyDomain
from areole.utils.exceptions import (
        AffinityViolation, NonSquareRepetitionError, ParametricLimitationError,
        RepetitionDependentDomainError, RepetitionPragmaError,
        UndeclaredArrayError, UnsupportedConstructError
        )

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")
NUMERIC = ["mytc.aol", "copy.aol", "strided.aol", "shared.aol",
           "scalar_ref.aol", "no_overlap.aol", "input_overlap.aol",
           "output_overlap.aol", "constant_row.aol", "triangle.aol"]


def load(name: str):
    with open(os.path.join(FIXTURES, name), encoding="utf-8") as f:
        return parse(f.read())


def rows(m: IntMatrix):
    return m.to_rows()


class TestAffineExpr(unittest.TestCase):
    def test_coefficients(self):
        e = AffineExpr(3 * symbol("i") - symbol("j") + 5, ("i", "j"))
        self.assertEqual(e.instantiate(), ((3, -1), 5))
        self.assertEqual(e.evaluate({"i": 2, "j": 1}), 10)
        self.assertEqual(e.coeffs, {"i": 3, "j": -1})
        self.assertEqual(e.constant, 5)

    def test_parametric_coefficient(self):
        n = symbol("N")
        e = AffineExpr(n * symbol("j") + 1, ("j",))
        self.assertEqual(e.parameters, ("N",))
        self.assertFalse(e.is_numeric())
        self.assertTrue(e.is_numeric({"N": 2}))
        self.assertEqual(e.instantiate({"N": 4}), ((4,), 1))
        with self.assertRaises(ParametricLimitationError):
            e.instantiate()

    def test_product_of_counters(self):
        with self.assertRaises(AffinityViolation):
            AffineExpr(symbol("i") * symbol("j"), ("i", "j"))

    def test_equality_after_expansion(self):
        i = symbol("i")
        self.assertEqual(AffineExpr(2 * (i + 1), ("i",)),
                         AffineExpr(2 * i + 2, ("i",)))


class TestReferences(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.numeric_refs = [ref for name in NUMERIC
                            for ref in analyze(load(name))]

    def test_correlation_kernel(self):
        """Two channels of in with pavings (0,0) and (1,0); out (1,0)."""
        refs = analyze(load("mytc.aol"))
        self.assertEqual([r.label for r in refs], ["in#1", "in#2", "out#1"])
        in1, in2, out = refs
        self.assertEqual(rows(in1.paving_matrix()), [[0], [0]])
        self.assertEqual(rows(in2.paving_matrix()), [[1], [0]])
        self.assertEqual(rows(out.paving_matrix()), [[1], [0]])
        self.assertEqual(rows(in1.local_matrix()), [[0, 0], [0, 1]])
        self.assertEqual(rows(in2.local_matrix()), [[0, 0], [1, 1]])
        self.assertEqual(rows(out.local_matrix()), [[0], [1]])
        self.assertEqual(in1.origin_vector(), (0, 11))
        self.assertEqual(in2.origin_vector(), (1, 0))
        self.assertEqual(out.access, "write")
        self.assertEqual(in1.access, "read")
        self.assertEqual(in2.inner_counters, ("k", "j"))
        self.assertEqual(out.inner_counters, ("k",))
        self.assertEqual(in2.text, "in[i + 1][k + j]")

    def test_domains(self):
        refs = analyze(load("mytc.aol"))
        self.assertIsInstance(refs[0].domain, BoxDomain)
        self.assertEqual(refs[0].domain.ranges(), [(0, 10), (0, 99)])
        tri = analyze(load("triangle.aol"))
        self.assertIsInstance(tri[1].domain, PolyDomain)
        nest = analyze(load("loopnest.aol"))
        self.assertIsInstance(nest[1].domain, LoopNestDomain)

    def test_repetition_space(self):
        space = repetition_space(load("mytc.aol"))
        self.assertEqual(space.counters, ("i",))
        self.assertEqual(space.ranges(), [(0, 6)])
        self.assertEqual(len(list(space.points())), 7)
        self.assertEqual(space.describe(), ["i in [0, 6]"])

    def test_parametric_reference(self):
        refs = analyze(load("parametric.aol"))
        x = refs[1]
        self.assertEqual(x.parameters, ("N",))
        self.assertEqual(x.local[0, 0], symbol("N"))
        self.assertEqual(rows(x.local_matrix({"N": 3})), [[3]])
        with self.assertRaises(ParametricLimitationError):
            x.local_matrix()

    def test_jacobians_are_filled(self):
        refs = extract_references(load("copy.aol"))
        self.assertIsNone(refs[0].paving)
        ref = jacobians(refs[0])
        self.assertIsInstance(ref.paving, sympy.ImmutableMatrix)
        self.assertEqual(rows(ref.paving_matrix()), [[1, 0], [0, 1]])
        self.assertEqual(ref.local.shape, (2, 0))

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_jacobian_identity(self, data):
        """e(r, j) = P.r + B.j + e(0, 0) at random points."""
        for ref in self.numeric_refs:
            r = data.draw(st.tuples(*[st.integers(-50, 50)] *
                                    len(ref.repetition_counters)))
            j = data.draw(st.tuples(*[st.integers(-50, 50)] * ref.d))
            expected = tuple(
                p + b + o for p, b, o in zip(
                    ref.paving_matrix().apply(r),
                    ref.local_matrix().apply(j),
                    ref.origin_vector()))
            self.assertEqual(ref.evaluate(r, j), expected)

    def test_nonaffine(self):
        with self.assertRaises(AffinityViolation) as ctx:
            analyze(load("nonaffine.aol"))
        self.assertEqual(ctx.exception.code, "E_NONAFFINE")

    def test_nonsquare(self):
        with self.assertRaises(NonSquareRepetitionError) as ctx:
            repetition_space(load("nonsquare.aol"))
        self.assertEqual(ctx.exception.counter, "i")

    def test_repetition_dependent_domain(self):
        program = parse(
            "@repetition(i)\nfunc f(x[] : in) {\n"
            "    for (i = 0; i < 4; i++) {\n"
            "        for (j = 0; j < i; j++) { S = x[j]; }\n"
            "    }\n}\n")
        with self.assertRaises(RepetitionDependentDomainError):
            extract_references(program)

    def test_undeclared_array(self):
        program = parse("func f(x[] : in) {\n    S = z[0] + x[0];\n}\n")
        with self.assertRaises(UndeclaredArrayError):
            extract_references(program)

    def test_rank_mismatch(self):
        program = parse("func f(x[][] : in) {\n    S = x[0];\n}\n")
        with self.assertRaises(UnsupportedConstructError):
            extract_references(program)

    def test_scalar_in_subscript(self):
        program = parse("func f(x[] : in) {\n"
                        "    S = 0;\n    T = x[S];\n}\n")
        with self.assertRaises(UnsupportedConstructError):
            extract_references(program)

    def test_access_outside_repetition(self):
        program = parse(
            "@repetition(i)\nfunc f(x[] : in, y[] : out) {\n"
            "    y[0] = x[0];\n"
            "    for (i = 0; i < 4; i++) { y[i] = x[i]; }\n}\n")
        with self.assertRaises(RepetitionPragmaError):
            extract_references(program)


if __name__ == "__main__":
    unittest.main()
