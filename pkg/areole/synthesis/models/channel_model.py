#!/usr/bin/python3

from typing import Dict, List, Literal, Optional, Sequence, Tuple
from pydantic import BaseModel, ConfigDict, Field
from areole.echelon.row_echelon import EchelonDecomposition
from areole.exact.matrix import IntMatrix
from areole.front.ast import ArrayDecl
from areole.front.references import ArrayReference, RepetitionSpace
from areole.synthesis.models.diagnostics_model import Diagnostics

Strategy = Literal["general", "footprint-box", "domain-iso"]


class PatternAccess(BaseModel):
    """
    The rewritten access phi(j) = matrix.j + shift, mapping the inner
    counters of one reference to pattern coordinates.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: IntMatrix = Field(..., description="pattern_dim x d matrix.")
    shift: Tuple[int, ...] = Field(..., description="Constant part.")

    def apply(self, j: Sequence[int]) -> Tuple[int, ...]:
        return tuple(x + s for x, s in zip(self.matrix.apply(j), self.shift))


class Channel(BaseModel):
    """
    One transfer between an array and a pattern, shared by the references
    of a group.

    For every reference k and every j in its domain the access is
    recovered as

        paving_origin + fitting.phi_k(j) = B_k.j + b_k

    and phi_k(j) lies in the box [0, pattern_sizes - 1].
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    number: int = Field(..., ge=1, description="Channel number per array.")
    array: ArrayDecl
    refs: Tuple[ArrayReference, ...]
    paving: IntMatrix
    paving_origin: Tuple[int, ...]
    repetition: RepetitionSpace
    pattern_sizes: Tuple[int, ...]
    fitting: IntMatrix
    pattern_shift: Tuple[int, ...]
    rewritten: Tuple[PatternAccess, ...]
    strategy: Strategy
    combined: IntMatrix = Field(
        ..., description="[B1 ... BN (b2 - b1) ... (bN - b1)].")
    echelon: Optional[EchelonDecomposition] = None
    bindings: Dict[str, int] = Field(default_factory=dict)
    diagnostics: Optional[Diagnostics] = None

    @property
    def name(self) -> str:
        return f"{self.array.name}_ch{self.number}"

    @property
    def pattern_dim(self) -> int:
        return len(self.pattern_sizes)

    @property
    def pattern_box(self) -> List[Tuple[int, int]]:
        return [(0, s - 1) for s in self.pattern_sizes]

    @property
    def has_write(self) -> bool:
        return any(ref.access == "write" for ref in self.refs)

    def cell(self, k: int, j: Sequence[int]) -> Tuple[int, ...]:
        """Array cell of reference k (0-based) at j, relative to P.r."""
        local = self.fitting.apply(self.rewritten[k].apply(j))
        return tuple(o + x for o, x in zip(self.paving_origin, local))


class ParametricChannel(BaseModel):
    """
    Symbolic echelon form of a channel whose combined matrix keeps
    parameters and is 1x1 or 2x2.
    """
    model_config = ConfigDict(frozen=True)

    array: str
    refs: Tuple[str, ...]
    paving: List[List[str]]
    combined: List[List[str]]
    echelon_form: List[List[str]]
    conditions: List[str] = Field(
        default_factory=list,
        description="Definitions of the auxiliary symbols g, u, v.")
