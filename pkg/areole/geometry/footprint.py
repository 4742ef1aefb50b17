#!/usr/bin/python3
"""
Footprints: images of an iteration domain under j -> B.j + b.

The image of a polytope is the hull of the images of its vertices, so the
vertex images (a superset of the footprint's vertices) and their bounding
box are all the synthesis needs. The hull itself is never built.
"""
from typing import List, Mapping, NamedTuple, Sequence, Tuple
from areole.exact.matrix import IntMatrix
from areole.exact.rational import RatVector
from areole.geometry.domain import IterationDomain
from areole.utils.exceptions import DimensionMismatchError, EmptyDomainError

Range = Tuple[int, int]


class Footprint(NamedTuple):
    """
    Attributes:
        vertex_images (List[RatVector]): f(v) for every vertex v.
        bbox (List[Range]): Integer [min, max] per array dimension.
    """
    vertex_images: List[RatVector]
    bbox: List[Range]


def bounding_box(points: Sequence[RatVector]) -> List[Range]:
    """
    Componentwise floor of the minima and ceiling of the maxima.

    Raises:
        EmptyDomainError: If points is empty.
        DimensionMismatchError: If the points differ in dimension.
    """
    if not points:
        raise EmptyDomainError("Cannot bound an empty set of points.")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise DimensionMismatchError("Points of different dimensions.")
    return [(min(p.floor()[t] for p in points),
             max(p.ceil()[t] for p in points)) for t in range(dim)]


def affine_image(b: IntMatrix, origin: Sequence[int],
                 point: Sequence) -> RatVector:
    return RatVector(x + o for x, o in zip(b.apply(point), origin))


def footprint(b: IntMatrix, origin: Sequence[int], domain: IterationDomain,
              bindings: Mapping[str, int] = None) -> Footprint:
    """
    Footprint of the reference j -> B.j + origin over domain.

    Raises:
        DimensionMismatchError: If B does not have one column per counter.
        EmptyDomainError: If the domain has no vertex.
        UnboundedDomainError: Propagated from the vertex computation.
    """
    if b.cols != domain.dim or b.rows != len(origin):
        raise DimensionMismatchError(
            f"{b.rows}x{b.cols} matrix with origin of length {len(origin)} "
            f"for a {domain.dim}-dimensional domain.")
    images = [affine_image(b, origin, v) for v in domain.vertices(bindings)]
    return Footprint(images, bounding_box(images))
