from .integers import gcd_bezout
from .matrix import IntMatrix, mat_mul, determinant
from .rational import RatVector, rational_solve, rank_oracle
