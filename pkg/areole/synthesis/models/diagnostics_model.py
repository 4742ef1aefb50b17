#!/usr/bin/python3

from fractions import Fraction
from typing import Literal, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator


class OverlapReport(BaseModel):
    """
    Outcome of the overlap check of one channel.

    A witness is the first pair of distinct repetition points, in
    lexicographic order, whose footprints share an array cell.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["none", "input-overlap", "output-overlap", "unchecked"] = \
        Field(..., description="Overlap severity; 'unchecked' when the "
              "check was not requested or could not run.")
    first: Optional[Tuple[int, ...]] = Field(
        None, description="Repetition point that used the cell first.")
    second: Optional[Tuple[int, ...]] = Field(
        None, description="Later repetition point using the same cell.")
    cell: Optional[Tuple[int, ...]] = Field(
        None, description="Shared array cell.")

    @property
    def overlaps(self) -> bool:
        return self.kind in ("input-overlap", "output-overlap")


class Diagnostics(BaseModel):
    """
    Quality indicators of a channel.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    overlap: OverlapReport = Field(
        default_factory=lambda: OverlapReport(kind="unchecked"))
    overhead_ratio: Optional[Fraction] = Field(
        None, description="Useful pattern cells over pattern box cells.")
    overhead_asymptotic: Optional[Fraction] = Field(
        None, description="1/|det| of the combined matrix when square and "
        "of full rank.")
    paving_shape_ok: bool = Field(
        ..., description="Paving has at most one nonzero per row and "
        "column.")

    @field_validator('overhead_ratio')
    def check_ratio(cls, value):
        """
        A ratio of used cells lies in (0, 1].
        """
        if value is not None and not 0 < value <= 1:
            raise ValueError(f"Overhead ratio {value} outside (0, 1].")
        return value
