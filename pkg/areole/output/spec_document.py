#!/usr/bin/python3
"""
The machine-readable access specification.

A JSON document with the arrays, the repetition space and one entry per
channel. Integers are written as decimal strings so that consumers with
64-bit integers cannot silently truncate them. The same models read a
document back (load_spec).
"""
import json
from fractions import Fraction
from typing import Annotated, Dict, List, Literal, Optional, Sequence, Tuple
from pydantic import (
    BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer,
    ValidationError, field_validator, model_validator
)
from areole.exact.matrix import IntMatrix
from areole.front.ast import ArrayDecl
from areole.front.references import RepetitionSpace
from areole.synthesis.models.channel_model import Channel, ParametricChannel
from areole.synthesis.models.diagnostics_model import Diagnostics
from areole.utils.exceptions import SpecFormatError


def _parse_int(value):
    if isinstance(value, str):
        return int(value.strip())
    return value


BigInt = Annotated[
    int, BeforeValidator(_parse_int),
    PlainSerializer(str, return_type=str, when_used="json")]


def _fraction_text(value: Optional[Fraction]) -> Optional[str]:
    if value is None:
        return None
    return f"{value.numerator}/{value.denominator}"


class MatrixSpec(BaseModel):
    """Row-major integer matrix with its shape."""
    model_config = ConfigDict(frozen=True)

    shape: Tuple[int, int] = Field(..., description="(rows, columns).")
    data: List[BigInt] = Field(..., description="Row-major entries.")

    @model_validator(mode="after")
    def check_size(self):
        """
        The entries must fill the declared shape.
        """
        rows, cols = self.shape
        if len(self.data) != rows * cols:
            raise ValueError(
                f"{len(self.data)} entries for a {rows}x{cols} matrix.")
        return self

    @classmethod
    def from_matrix(cls, m: IntMatrix) -> "MatrixSpec":
        return cls(shape=m.shape, data=list(m.entries))

    def to_matrix(self) -> IntMatrix:
        return IntMatrix(self.shape[0], self.shape[1], self.data)


class PhiSpec(BaseModel):
    """phi(j) = matrix.j + shift."""
    model_config = ConfigDict(frozen=True)

    matrix: MatrixSpec
    shift: List[BigInt]


class RefSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    occurrence: int = Field(..., ge=1)
    label: str = Field(..., description="ARRAY#occurrence.")
    access: Literal["read", "write"]
    text: str = Field(..., description="Source text of the access.")
    inner_counters: List[str]
    phi: PhiSpec


class OverlapSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["none", "input-overlap", "output-overlap", "unchecked"]
    first: Optional[List[BigInt]] = None
    second: Optional[List[BigInt]] = None
    cell: Optional[List[BigInt]] = None


class DiagnosticsSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    overlap: OverlapSpec
    overhead_ratio: Optional[str] = Field(
        None, pattern=r"^\d+/\d+$", description="Exact ratio 'p/q'.")
    overhead_asymptotic: Optional[str] = Field(
        None, pattern=r"^\d+/\d+$")
    paving_shape_ok: bool

    @classmethod
    def from_diagnostics(cls, d: Diagnostics) -> "DiagnosticsSpec":
        o = d.overlap
        return cls(
            overlap=OverlapSpec(
                kind=o.kind,
                first=list(o.first) if o.first is not None else None,
                second=list(o.second) if o.second is not None else None,
                cell=list(o.cell) if o.cell is not None else None),
            overhead_ratio=_fraction_text(d.overhead_ratio),
            overhead_asymptotic=_fraction_text(d.overhead_asymptotic),
            paving_shape_ok=d.paving_shape_ok)


class ChannelSpec(BaseModel):
    """One channel of the specification."""
    model_config = ConfigDict(frozen=True)

    name: str
    array: str
    strategy: Literal["general", "footprint-box", "domain-iso"]
    paving: MatrixSpec
    paving_origin: List[BigInt]
    pattern_sizes: List[BigInt]
    fitting: MatrixSpec
    refs: List[RefSpec]
    diagnostics: Optional[DiagnosticsSpec] = None

    @field_validator('pattern_sizes')
    def check_sizes(cls, value):
        """
        Pattern extents are nonnegative; 0 marks an empty pattern.
        """
        if any(s < 0 for s in value):
            raise ValueError(f"Pattern sizes {value} must not be negative.")
        return value

    @classmethod
    def from_channel(cls, ch: Channel) -> "ChannelSpec":
        refs = [RefSpec(
            occurrence=ref.occurrence, label=ref.label, access=ref.access,
            text=ref.text, inner_counters=list(ref.inner_counters),
            phi=PhiSpec(matrix=MatrixSpec.from_matrix(phi.matrix),
                        shift=list(phi.shift)))
            for ref, phi in zip(ch.refs, ch.rewritten)]
        return cls(
            name=ch.name, array=ch.array.name, strategy=ch.strategy,
            paving=MatrixSpec.from_matrix(ch.paving),
            paving_origin=list(ch.paving_origin),
            pattern_sizes=list(ch.pattern_sizes),
            fitting=MatrixSpec.from_matrix(ch.fitting),
            refs=refs,
            diagnostics=DiagnosticsSpec.from_diagnostics(ch.diagnostics)
            if ch.diagnostics is not None else None)


class RepetitionSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    counter: str
    lower: str = Field(..., description="Inclusive lower bound.")
    upper: str = Field(..., description="Inclusive upper bound.")


class SpecDocument(BaseModel):
    """The whole specification, schema version 1."""
    model_config = ConfigDict(frozen=True)

    spec_version: Literal[1] = 1
    source: str = Field(..., description="Base name of the input file.")
    function: str
    parameters: Dict[str, BigInt] = Field(
        default_factory=dict, description="Bound parameter values.")
    arrays: List[ArrayDecl]
    repetition: List[RepetitionSpec]
    channels: List[ChannelSpec]
    parametric_channels: List[ParametricChannel] = Field(
        default_factory=list)


def build_spec_document(source: str, function: str,
                        arrays: Sequence[ArrayDecl],
                        repetition: RepetitionSpace,
                        channels: Sequence[Channel],
                        parametric: Sequence[ParametricChannel] = (),
                        bindings: Dict[str, int] = None) -> SpecDocument:
    return SpecDocument(
        source=source, function=function,
        parameters=dict(sorted((bindings or {}).items())),
        arrays=list(arrays),
        repetition=[RepetitionSpec(counter=c, lower=str(lo), upper=str(hi))
                    for c, lo, hi in zip(repetition.counters,
                                         repetition.lower,
                                         repetition.upper)],
        channels=[ChannelSpec.from_channel(ch) for ch in channels],
        parametric_channels=list(parametric))


def dump_spec(doc: SpecDocument) -> str:
    """Canonical JSON text; equal documents give identical text."""
    return json.dumps(doc.model_dump(mode="json"), indent=2) + "\n"


def load_spec(text: str) -> SpecDocument:
    """
    Read a specification back.

    Raises:
        SpecFormatError: If the text is not a valid document.
    """
    try:
        return SpecDocument.model_validate_json(text)
    except ValidationError as e:
        raise SpecFormatError(e)
