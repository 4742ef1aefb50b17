from .domain import (
    BoxDomain,
    IterationDomain,
    LoopNestDomain,
    PolyDomain,
    UserBoxDomain,
    domain_from_bounds
)
from .footprint import Footprint, bounding_box, footprint
from .lattice import IntLattice, combine_lattices, lattice_member
