#!/usr/bin/python3
"""
Integer lattices L(B, b) = {B.x + b : x integer}.

The cells used by N references with local matrices B^k and origins b^k
all lie in the lattice generated by

    [B^1 ... B^N (b^2 - b^1) ... (b^N - b^1)]

with origin b^1: each point B^k.x + b^k is that combination with x in the
slot of B^k and a coefficient 1 on its difference column.
"""
from typing import Sequence
from areole.echelon.row_echelon import row_echelon
from areole.exact.matrix import IntMatrix
from areole.utils.exceptions import DimensionMismatchError


class IntLattice:
    """
    Attributes:
        gens (IntMatrix): Generators as columns.
        origin (Tuple[int, ...]): The translation b.
    """
    __slots__ = ("gens", "origin")

    def __init__(self, gens: IntMatrix, origin: Sequence[int]):
        if gens.rows != len(origin):
            raise DimensionMismatchError(
                f"{gens.rows}-row generators with a {len(origin)}-vector "
                "origin.")
        self.gens = gens
        self.origin = tuple(int(x) for x in origin)

    @property
    def dim(self) -> int:
        return self.gens.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntLattice):
            return NotImplemented
        return self.gens == other.gens and self.origin == other.origin

    def __hash__(self) -> int:
        return hash((self.gens, self.origin))

    def __repr__(self) -> str:
        return f"IntLattice({self.gens.to_rows()}, origin={self.origin})"


def difference_columns(origins: Sequence[Sequence[int]]) -> IntMatrix:
    """Columns b^k - b^1 for k = 2..N."""
    first = origins[0]
    return IntMatrix.from_columns(
        [[x - y for x, y in zip(o, first)] for o in origins[1:]],
        len(first))


def combine_lattices(lats: Sequence[IntLattice]) -> IntLattice:
    """
    A lattice containing every given lattice.

    A single lattice is returned as is.

    Raises:
        DimensionMismatchError: If the list is empty or the lattices live
        in different dimensions.
    """
    if not lats:
        raise DimensionMismatchError("No lattice to combine.")
    dims = {lat.dim for lat in lats}
    if len(dims) != 1:
        raise DimensionMismatchError(
            f"Lattices of dimensions {sorted(dims)} cannot be combined.")
    if len(lats) == 1:
        return lats[0]
    gens = lats[0].gens.hstack(
        *[lat.gens for lat in lats[1:]],
        difference_columns([lat.origin for lat in lats]))
    return IntLattice(gens, lats[0].origin)


def lattice_member(lat: IntLattice, point: Sequence[int]) -> bool:
    """
    Whether point = B.x + b for some integer vector x.

    With B = P.[[H, 0], [C, 0]].U and U unimodular, this asks for an
    integer y with [H; C].y = P^T.(point - b): forward substitution
    through the triangular H fixes y, then C.y must match the rest.
    """
    if len(point) != lat.dim:
        raise DimensionMismatchError(
            f"Point of dimension {len(point)} for a {lat.dim}-dim lattice.")
    target = tuple(p - o for p, o in zip(point, lat.origin))
    ech = row_echelon(lat.gens)
    target = ech.p_mat.transpose().apply(target)

    h, y = ech.h_mat, []
    for i in range(ech.rank):
        rest = target[i] - sum(h[i, k] * y[k] for k in range(i))
        if rest % h[i, i] != 0:
            return False
        y.append(rest // h[i, i])
    return ech.c_mat.apply(y) == tuple(target[ech.rank:])
