#!/usr/bin/python3
import itertools
import unittest
from fractions import Fraction
from unittest.mock import patch
from hypothesis import given, settings, strategies as st
from areole.echelon.oracle import lattice_points_in_box
from areole.exact.matrix import IntMatrix
from areole.exact.rational import RatVector
from areole.front.affine import symbol
from areole.geometry.domain import (
    BoxDomain, LoopNestDomain, PolyDomain, UserBoxDomain, domain_from_bounds
)
from areole.geometry.footprint import bounding_box, footprint
from areole.geometry.lattice import (
    IntLattice, combine_lattices, difference_columns, lattice_member
)
from areole.utils.exceptions import (
        BudgetExceededError, DimensionMismatchError, EmptyDomainError,
        ParametricLimitationError, UnboundedDomainError
        )

i, j, n = symbol("i"), symbol("j"), symbol("N")


def triangle() -> PolyDomain:
    """0 <= j <= i <= 3."""
    return PolyDomain(("i", "j"), [i, 3 - i, j, i - j])


@st.composite
def box_domains(draw, max_dim=3):
    """Boxes of at most 5 points per side, possibly degenerate."""
    dim = draw(st.integers(1, max_dim))
    lower = draw(st.lists(st.integers(-4, 4), min_size=dim, max_size=dim))
    widths = draw(st.lists(st.integers(0, 4), min_size=dim, max_size=dim))
    return BoxDomain(tuple("jkl"[:dim]),
                     lower, [lo + w for lo, w in zip(lower, widths)])


@st.composite
def accesses(draw):
    """A box domain with a random access matrix and origin into it."""
    domain = draw(box_domains())
    rows = draw(st.integers(1, 3))
    b = IntMatrix(rows, domain.dim, draw(st.lists(
        st.integers(-3, 3), min_size=rows * domain.dim,
        max_size=rows * domain.dim)))
    origin = draw(st.lists(st.integers(-5, 5), min_size=rows,
                           max_size=rows))
    return b, tuple(origin), domain


class TestBoxDomain(unittest.TestCase):
    def test_vertices_and_points(self):
        box = BoxDomain(("k", "j"), [0, 0], [10, 99])
        self.assertEqual(box.vertices(), [(0, 0), (0, 99), (10, 0),
                                          (10, 99)])
        self.assertEqual(len(list(box.points())), 11 * 100)

    def test_degenerate_range(self):
        box = BoxDomain(("j",), [5], [5])
        self.assertEqual(box.vertices(), [(5,)])

    def test_empty(self):
        box = BoxDomain(("j",), [0], [-1])
        self.assertTrue(box.is_empty())
        self.assertEqual(box.vertices(), [])
        self.assertEqual(list(box.points()), [])

    def test_zero_dimensional(self):
        box = BoxDomain((), (), ())
        self.assertEqual(box.vertices(), [RatVector(())])
        self.assertEqual(list(box.points()), [()])

    def test_parametric_bounds(self):
        box = BoxDomain(("j",), [0], [n - 1])
        self.assertEqual(box.parameters, ("N",))
        self.assertEqual(box.vertices({"N": 4}), [(0,), (3,)])
        with self.assertRaises(ParametricLimitationError):
            box.vertices()

    def test_bound_count_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            BoxDomain(("i", "j"), [0], [1, 2])

    @patch("areole.geometry.domain.Config.AREOLE_ENUMERATION_BUDGET", "10")
    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            BoxDomain(("j",), [0], [99]).points()

    def test_to_poly_agrees(self):
        box = BoxDomain(("i", "j"), [1, -2], [3, 2])
        self.assertEqual(box.to_poly().vertices(), box.vertices())

    @settings(max_examples=200, deadline=None)
    @given(box_domains())
    def test_to_poly_agrees_on_random_boxes(self, box):
        self.assertEqual(box.to_poly().vertices(), box.vertices())


class TestPolyDomain(unittest.TestCase):
    def test_triangle_vertices(self):
        self.assertEqual(triangle().vertices(),
                         [(0, 0), (3, 0), (3, 3)])

    def test_triangle_points(self):
        self.assertEqual(len(list(triangle().points())), 10)

    def test_rational_vertex(self):
        """2j <= i, i <= 3, j >= 0 has the vertex (3, 3/2)."""
        dom = PolyDomain(("i", "j"), [i - 2 * j, 3 - i, j])
        self.assertIn(RatVector([3, Fraction(3, 2)]), dom.vertices())
        self.assertEqual(sorted(dom.points()),
                         [(0, 0), (1, 0), (2, 0), (2, 1), (3, 0), (3, 1)])

    def test_unbounded(self):
        dom = PolyDomain(("i", "j"), [i, j, 3 - j])
        self.assertFalse(dom.is_bounded())
        with self.assertRaises(UnboundedDomainError):
            dom.vertices()

    @patch("areole.geometry.domain.Config.AREOLE_MAX_HPOLY_DIM", "1")
    def test_limits(self):
        with self.assertRaises(UnboundedDomainError):
            triangle().vertices()


class TestLoopNestAndUserBox(unittest.TestCase):
    def setUp(self):
        self.nest = LoopNestDomain(("i", "j"), [0, 0], [2, i * i - 1])

    def test_points(self):
        self.assertEqual(list(self.nest.points()),
                         [(1, 0), (2, 0), (2, 1), (2, 2), (2, 3)])

    def test_no_vertices(self):
        with self.assertRaises(UnboundedDomainError):
            self.nest.vertices()

    def test_user_box(self):
        box = UserBoxDomain(("i", "j"), [(0, 2), (0, 3)], exact=self.nest)
        self.assertEqual(len(box.vertices()), 4)
        self.assertEqual(list(box.points()), list(self.nest.points()))

    def test_user_box_too_small(self):
        box = UserBoxDomain(("i", "j"), [(0, 2), (0, 2)], exact=self.nest)
        with self.assertRaises(UnboundedDomainError):
            list(box.points())

    def test_user_box_without_exact_domain(self):
        box = UserBoxDomain(("j",), [(2, 4)])
        self.assertEqual(list(box.points()), [(2,), (3,), (4,)])
        with self.assertRaises(DimensionMismatchError):
            UserBoxDomain(("i", "j"), [(0, 1)])


class TestDomainFromBounds(unittest.TestCase):
    def test_classification(self):
        self.assertIsInstance(
            domain_from_bounds(["i", "j"], [0, 0], [3, 5]), BoxDomain)
        self.assertIsInstance(
            domain_from_bounds(["i", "j"], [0, 0], [3, i]), PolyDomain)
        self.assertIsInstance(
            domain_from_bounds(["i", "j"], [0, 0], [3, i * i]),
            LoopNestDomain)

    def test_affine_nest_vertices(self):
        dom = domain_from_bounds(["i", "j"], [0, 0], [3, i])
        self.assertEqual(dom.vertices(), triangle().vertices())


class TestFootprint(unittest.TestCase):
    def test_correlation_window(self):
        b = IntMatrix.from_rows([[0, 0], [1, 1]])
        fp = footprint(b, (1, 0), BoxDomain(("k", "j"), [0, 0], [10, 99]))
        self.assertEqual(fp.bbox, [(1, 1), (0, 109)])
        self.assertEqual(len(fp.vertex_images), 4)

    def test_bounding_box_rounds_outwards(self):
        box = bounding_box([RatVector([Fraction(1, 2), 0]),
                            RatVector([Fraction(7, 2), -Fraction(1, 3)])])
        self.assertEqual(box, [(0, 4), (-1, 0)])

    def test_bounding_box_errors(self):
        with self.assertRaises(EmptyDomainError):
            bounding_box([])
        with self.assertRaises(DimensionMismatchError):
            bounding_box([RatVector([1]), RatVector([1, 2])])

    def test_shape_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            footprint(IntMatrix.identity(2), (0, 0),
                      BoxDomain(("j",), [0], [3]))

    @settings(max_examples=300, deadline=None)
    @given(accesses())
    def test_bbox_is_tight_around_every_image(self, access):
        b, origin, domain = access
        fp = footprint(b, origin, domain)
        images = [tuple(x + o for x, o in zip(b.apply(p), origin))
                  for p in domain.points()]
        self.assertEqual(fp.bbox, [(min(c), max(c)) for c in zip(*images)])


def lattices(dim):
    def build(args):
        gens, origin = args
        return IntLattice(IntMatrix(dim, len(gens) // dim, gens), origin)
    return st.tuples(
        st.integers(1, 2).flatmap(lambda k: st.lists(
            st.integers(-3, 3), min_size=k * dim, max_size=k * dim)),
        st.lists(st.integers(-2, 2), min_size=dim, max_size=dim)).map(build)


def points_in_box(lat: IntLattice, box):
    shifted = [(lo - o, hi - o) for (lo, hi), o in zip(box, lat.origin)]
    return {tuple(x + o for x, o in zip(p, lat.origin))
            for p in lattice_points_in_box(lat.gens, shifted)}


class TestLattice(unittest.TestCase):
    def test_gcd_spacing(self):
        """Spacings 4 and 6 combine to spacing 2."""
        combined = combine_lattices([
            IntLattice(IntMatrix.from_rows([[4]]), (0,)),
            IntLattice(IntMatrix.from_rows([[6]]), (0,))])
        self.assertTrue(lattice_member(combined, (2,)))
        self.assertTrue(lattice_member(combined, (-10,)))
        self.assertFalse(lattice_member(combined, (3,)))

    def test_origins_enter_as_columns(self):
        a = IntLattice(IntMatrix.from_rows([[2]]), (0,))
        b = IntLattice(IntMatrix.from_rows([[2]]), (1,))
        combined = combine_lattices([a, b])
        self.assertEqual(combined.gens.to_rows(), [[2, 2, 1]])
        self.assertEqual(combined.origin, (0,))
        self.assertTrue(lattice_member(combined, (7,)))

    def test_single_lattice(self):
        a = IntLattice(IntMatrix.from_rows([[3]]), (1,))
        self.assertIs(combine_lattices([a]), a)

    def test_errors(self):
        with self.assertRaises(DimensionMismatchError):
            combine_lattices([])
        with self.assertRaises(DimensionMismatchError):
            combine_lattices([IntLattice(IntMatrix.identity(1), (0,)),
                              IntLattice(IntMatrix.identity(2), (0, 0))])
        with self.assertRaises(DimensionMismatchError):
            lattice_member(IntLattice(IntMatrix.identity(2), (0, 0)), (1,))

    def test_difference_columns(self):
        self.assertEqual(difference_columns([(0, 11), (1, 0)]).to_rows(),
                         [[1], [-11]])

    def test_membership_with_zero_rows(self):
        lat = IntLattice(IntMatrix.from_rows([[0], [2]]), (0, 1))
        self.assertTrue(lattice_member(lat, (0, 5)))
        self.assertFalse(lattice_member(lat, (1, 5)))
        self.assertFalse(lattice_member(lat, (0, 4)))

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 2).flatmap(
        lambda d: st.tuples(lattices(d), lattices(d))))
    def test_union_is_contained(self, pair):
        """Every point of either lattice near the origin is in the union."""
        first, second = pair
        combined = combine_lattices([first, second])
        box = [(-20, 20)] * first.dim
        union = points_in_box(first, box) | points_in_box(second, box)
        self.assertLessEqual(union, points_in_box(combined, box))
        for point in sorted(union)[:3]:
            self.assertTrue(lattice_member(combined, point))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 2).flatmap(lattices))
    def test_membership_matches_enumeration(self, lat):
        box = [(-6, 6)] * lat.dim
        candidates = itertools.product(range(-6, 7), repeat=lat.dim)
        members = {p for p in candidates if lattice_member(lat, p)}
        self.assertEqual(members, points_in_box(lat, box))


if __name__ == "__main__":
    unittest.main()
