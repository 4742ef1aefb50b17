#!/usr/bin/python3
import unittest
from unittest.mock import patch
import sympy
from hypothesis import assume, given, settings, strategies as st
from areole.echelon.oracle import lattice_equal_oracle, lattice_points_in_box
from areole.echelon.row_echelon import row_echelon
from areole.echelon.symbolic import (
    GCD, echelon_1x1_symbolic, echelon_2x2_symbolic
)
from areole.exact.matrix import IntMatrix, determinant
from areole.exact.rational import rank_oracle
from areole.front.affine import symbol
from areole.geometry.lattice import IntLattice, lattice_member
from areole.utils.exceptions import (
        BudgetExceededError, DegenerateFormError, EchelonStepLimitError
        )


def matrices(max_rows=5, max_cols=7, bound=9):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.integers(-bound, bound),
                               min_size=r * c, max_size=r * c).map(
                lambda e: IntMatrix(r, c, e))))


@st.composite
def unimodular(draw):
    """Identity transformed by random swaps, negations and shears."""
    n = draw(st.integers(1, 4))
    rows = IntMatrix.identity(n).to_rows()
    for _ in range(draw(st.integers(0, 12))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        op = draw(st.sampled_from(["swap", "negate", "shear"]))
        if op == "swap":
            rows[i], rows[j] = rows[j], rows[i]
        elif op == "negate":
            rows[i] = [-x for x in rows[i]]
        elif i != j:
            alpha = draw(st.integers(-3, 3))
            rows[i] = [x + alpha * y for x, y in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows)


def same_lattice(a: IntMatrix, b: IntMatrix) -> bool:
    """Every generator of each matrix is a member of the other lattice."""
    origin = (0,) * a.rows
    la, lb = IntLattice(a, origin), IntLattice(b, origin)
    return all(lattice_member(lb, a.column(j)) for j in range(a.cols)) and \
        all(lattice_member(la, b.column(j)) for j in range(b.cols))


class TestRowEchelon(unittest.TestCase):
    def test_known_factorization(self):
        """[[2, 4], [0, 0]] has H = [2] and U = [[1, 2], [0, 1]]."""
        ech = row_echelon(IntMatrix.from_rows([[2, 4], [0, 0]]))
        self.assertEqual(ech.rank, 1)
        self.assertEqual(ech.h_mat.to_rows(), [[2]])
        self.assertEqual(ech.c_mat.to_rows(), [[0]])
        self.assertEqual(ech.u_mat.to_rows(), [[1, 2], [0, 1]])
        self.assertEqual(ech.u_prime.to_rows(), [[1, 2]])
        self.assertEqual(ech.u_dprime.to_rows(), [[0, 1]])
        self.assertEqual(ech.p_mat, IntMatrix.identity(2))

    def test_zero_row_first(self):
        """A zero first row is swapped below the pivot."""
        b = IntMatrix.from_rows([[0], [1]])
        ech = row_echelon(b)
        self.assertEqual(ech.fitting().to_rows(), [[0], [1]])
        self.assertEqual(ech.reconstruct(), b)

    def test_zero_matrix(self):
        ech = row_echelon(IntMatrix.zeros(2, 3))
        self.assertEqual(ech.rank, 0)
        self.assertEqual(ech.h_mat.shape, (0, 0))
        self.assertEqual(ech.u_mat, IntMatrix.identity(3))
        self.assertEqual(ech.reconstruct(), IntMatrix.zeros(2, 3))

    def test_permutation_gives_identity(self):
        b = IntMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        ech = row_echelon(b)
        self.assertEqual(ech.h_mat, IntMatrix.identity(3))
        self.assertEqual(ech.reconstruct(), b)

    @patch("areole.config.Config.AREOLE_ECHELON_STEP_LIMIT",
           "2")
    def test_step_limit(self):
        with self.assertRaises(EchelonStepLimitError) as ctx:
            row_echelon(IntMatrix.from_rows([[7, 5]]))
        self.assertEqual(ctx.exception.limit, 2)

    @settings(max_examples=1000, deadline=None)
    @given(matrices())
    def test_decomposition_properties(self, b):
        """Reconstruction, permutation P, unimodular U, triangular H, rank."""
        ech = row_echelon(b)
        self.assertEqual(ech.reconstruct(), b)
        self.assertEqual(abs(determinant(ech.p_mat)), 1)
        self.assertEqual(abs(determinant(ech.u_mat)), 1)
        self.assertEqual(ech.rank, rank_oracle(b))
        h = ech.h_mat
        for i in range(ech.rank):
            self.assertGreater(h[i, i], 0)
            for k in range(i + 1, ech.rank):
                self.assertEqual(h[i, k], 0)
            for k in range(i):
                self.assertTrue(0 <= h[i, k] < h[i, i])
        self.assertEqual(ech.c_mat.shape, (b.rows - ech.rank, ech.rank))
        p = ech.p_mat
        for i in range(p.rows):
            self.assertEqual(sorted(p.row(i)), [0] * (p.cols - 1) + [1])
            self.assertEqual(sorted(p.column(i)), [0] * (p.rows - 1) + [1])


    @settings(max_examples=200, deadline=None)
    @given(unimodular())
    def test_unimodular_gives_identity(self, b):
        ech = row_echelon(b)
        self.assertEqual(ech.h_mat, IntMatrix.identity(b.rows))

    @settings(max_examples=200, deadline=None)
    @given(matrices(3, 4))
    def test_fitting_spans_column_lattice(self, b):
        """P.[H; C] generates the same lattice as B."""
        ech = row_echelon(b)
        if ech.rank == 0:
            self.assertTrue(b.is_zero())
            return
        self.assertTrue(same_lattice(ech.fitting(), b))


class TestSymbolicEchelon(unittest.TestCase):
    def test_one_by_one(self):
        self.assertEqual(echelon_1x1_symbolic(-3),
                         sympy.ImmutableMatrix([[3]]))
        n = symbol("N")
        self.assertEqual(echelon_1x1_symbolic(n)[0, 0], sympy.Abs(n))

    def test_formula_shape(self):
        form = echelon_2x2_symbolic(symbol("N"), 2, 0, 1)
        self.assertEqual(form.matrix[0, 0], GCD)
        self.assertEqual(form.matrix[0, 1], 0)

    def test_instantiate(self):
        form = echelon_2x2_symbolic(symbol("N"), 2, 0, 1)
        self.assertEqual(form.instantiate({"N": 4}).to_rows(),
                         [[2, 0], [1, 2]])

    def test_degenerate(self):
        with self.assertRaises(DegenerateFormError):
            echelon_2x2_symbolic(0, 0, 1, 2)
        form = echelon_2x2_symbolic(symbol("N"), 0, 1, 2)
        with self.assertRaises(DegenerateFormError):
            form.instantiate({"N": 0})

    @settings(max_examples=500, deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=4, max_size=4))
    def test_agrees_with_numeric(self, entries):
        """Instantiated closed form and row_echelon span one lattice."""
        a, b, c, d = entries
        assume((a, b) != (0, 0))
        closed = echelon_2x2_symbolic(a, b, c, d).instantiate()
        numeric = row_echelon(IntMatrix.from_rows([[a, b], [c, d]]))
        self.assertTrue(same_lattice(closed, numeric.fitting()))

    @settings(max_examples=500, deadline=None)
    @given(st.lists(st.integers(-30, 30), min_size=4, max_size=4))
    def test_agrees_with_oracle(self, entries):
        """Same check by brute-force enumeration on [-30, 30]^2."""
        a, b, c, d = entries
        assume((a, b) != (0, 0))
        closed = echelon_2x2_symbolic(a, b, c, d).instantiate()
        numeric = row_echelon(IntMatrix.from_rows([[a, b], [c, d]]))
        self.assertTrue(lattice_equal_oracle(
            closed, numeric.fitting(), [(-30, 30), (-30, 30)]))


class TestOracle(unittest.TestCase):
    def test_gcd_spacing(self):
        """Spacings 4 and 6 generate the multiples of 2."""
        points = lattice_points_in_box(IntMatrix.from_rows([[4, 6]]),
                                       [(-10, 10)])
        self.assertEqual(points, frozenset((x,) for x in range(-10, 11, 2)))

    def test_zero_generators(self):
        points = lattice_points_in_box(IntMatrix.zeros(2, 1),
                                       [(-1, 1), (-1, 1)])
        self.assertEqual(points, frozenset({(0, 0)}))

    @patch("areole.echelon.oracle.Config.AREOLE_ENUMERATION_BUDGET", "10")
    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            lattice_points_in_box(IntMatrix.identity(2), [(0, 9), (0, 9)])


if __name__ == "__main__":
    unittest.main()
