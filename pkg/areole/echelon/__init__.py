from .row_echelon import EchelonDecomposition, row_echelon
from .symbolic import (
    SymbolicEchelon2x2,
    echelon_1x1_symbolic,
    echelon_2x2_symbolic
)
from .oracle import lattice_equal_oracle, lattice_points_in_box
