#!/usr/bin/python3
"""
areole
======

Overview
--------
areole turns a loop-nest program into an Array-OL style description of
how it accesses its arrays. For every group of references that move
together across the repetition loops it builds a channel: a paving matrix
that says where each repetition starts, a fitting matrix that lays the
pattern over the array, and the pattern sizes. The elementary transform
can then be rewritten to read and write patterns instead of arrays.

All arithmetic is exact. Integer lattices are compared through their
row echelon form, so a channel covers exactly the cells the references
touch, with no rounding anywhere.

Key Features
------------
1. **Front end**:
   - A small C-like loop-nest language with parameters and a
     @repetition annotation.
   - Affine subscripts checked symbolically, Jacobians extracted per
     reference.
2. **Exact kernels**:
   - Integer matrices, Bezout coefficients and a row echelon form with
     its unimodular transform.
   - Symbolic echelon forms for 1x1 and 2x2 parametric matrices.
3. **Synthesis**:
   - Three pattern strategies: general, footprint-box and domain-iso.
   - Overlap detection and exact overhead ratios.
4. **Output**:
   - A versioned JSON specification, a text report and the rewritten
     program.
5. **Utilities**:
   - Built-in error handling, validation, and logging for better debugging.

Requirements
------------
- Python 3.9 or higher
- sympy, pyparsing, pydantic and python-dotenv

Installation
------------
```bash
pip install -r requirements.txt
pip install .
```

Quick Start
-----------
1. From the command line:
    ```bash
    areole tests/fixtures/mytc.aol --emit-spec --emit-report
    ```

2. From Python:
    ```python
    from areole import parse, analyze, partition_by_paving, synthesize

    program = parse(open("mytc.aol").read())
    for group in partition_by_paving(analyze(program)):
        channel = synthesize(group)
        print(channel.name, channel.paving.to_rows())
    ```

License
-------
Licensed under the MIT License. See the LICENSE file for details.
"""

__version__ = "1.0.0"

from .config import Config
from .front.parser import parse
from .front.references import analyze, extract_references, repetition_space
from .synthesis.partition import partition_by_paving
from .synthesis.synthesize import synthesize, synthesize_all
from .synthesis.diagnostics import diagnose
from .utils.exceptions import (
        AreoleError, FrontEndError, GeometryError,
        MathError, SynthesisError, BudgetExceededError
        )
from .utils.logger import get_logger
