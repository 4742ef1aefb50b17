#!/usr/bin/python3

import os
from typing import Dict, List, Literal, Optional, Tuple
from pydantic import BaseModel, Field, field_validator, model_validator


class RunConfig(BaseModel):
    """
    Everything a run of the analysis needs, as given on the command line.
    """
    input_path: str = Field(..., description="Loop-nest source file.")
    param_bindings: Dict[str, int] = Field(
        default_factory=dict, description="Values of the parameters.")
    strategy: Literal["general", "footprint-box", "domain-iso"] = Field(
        "general", description="Pattern synthesis strategy.")
    strict: bool = Field(
        False, description="Overlapping output footprints are an error.")
    check_overlap: bool = Field(
        False, description="Enumerate footprints to detect overlaps.")
    emit_spec: Optional[str] = Field(
        None, description="Spec document path; '' for the default name.")
    emit_report: Optional[str] = Field(
        None, description="Report path; '' for the default name.")
    emit_rewrite: Optional[str] = Field(
        None, description="Rewritten source path; '' for the default name.")
    output_dir: str = Field(".", description="Directory of default paths.")
    user_boxes: Dict[str, List[Tuple[int, int]]] = Field(
        default_factory=dict,
        description="Bounding boxes by reference label, e.g. 'in#2'.")
    verbose: bool = Field(
        False, description="Print the active settings to standard error.")

    @field_validator('param_bindings')
    def check_parameter_names(cls, value):
        """
        Parameter names must be identifiers.
        """
        for name in value:
            if not name.isidentifier():
                raise ValueError(f"'{name}' is not a parameter name.")
        return value

    @field_validator('user_boxes')
    def check_user_boxes(cls, value):
        """
        Labels read ARRAY#K and every range is nonempty.
        """
        for label, ranges in value.items():
            array, _, occurrence = label.partition("#")
            if not array or not occurrence.isdigit():
                raise ValueError(f"'{label}' is not a reference label.")
            for lo, hi in ranges:
                if lo > hi:
                    raise ValueError(f"Empty range {lo}..{hi} in {label}.")
        return value

    @model_validator(mode="after")
    def strict_implies_overlap(self):
        """
        Strict mode needs the overlap check.
        """
        if self.strict:
            self.check_overlap = True
        return self

    @property
    def stem(self) -> str:
        return os.path.splitext(os.path.basename(self.input_path))[0]

    def artifact_path(self, which: str) -> Optional[str]:
        """
        Output path of 'spec', 'report' or 'rewrite', or None when that
        artifact was not requested.
        """
        value = getattr(self, f"emit_{which}")
        if value is None:
            return None
        if value:
            return value
        suffix = {"spec": ".spec.json", "report": ".report.txt",
                  "rewrite": ".rewrite.aol"}[which]
        return os.path.join(self.output_dir, self.stem + suffix)
