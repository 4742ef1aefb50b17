#!/usr/bin/python3
"""
Human-readable report of a specification document: one fixed-width table
per channel, matrices printed one bracketed row per line.
"""
from typing import List, Sequence, Tuple
from areole import __version__
from areole.output.spec_document import (
    ChannelSpec, MatrixSpec, SpecDocument
)

LABEL_WIDTH = 14


def matrix_lines(m: MatrixSpec) -> List[str]:
    rows, cols = m.shape
    if rows == 0:
        return ["[]"]
    cells = [str(x) for x in m.data]
    width = max((len(c) for c in cells), default=1)
    return ["[" + " ".join(c.rjust(width)
                           for c in cells[i * cols:(i + 1) * cols]) + "]"
            for i in range(rows)]


def _field(label: str, lines: Sequence[str]) -> List[str]:
    out = [f"  {label:<{LABEL_WIDTH}}: {lines[0]}"]
    out += [" " * (LABEL_WIDTH + 4) + line for line in lines[1:]]
    return out


def _vector(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _table(header: Tuple[str, ...], rows: List[Tuple[str, ...]]
           ) -> List[str]:
    widths = [max(len(r[i]) for r in [header] + rows)
              for i in range(len(header))]
    fmt = "  " + "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*r) for r in rows]
    return [line.rstrip() for line in lines]


def channel_section(ch: ChannelSpec) -> List[str]:
    lines = [f"Channel {ch.name} (array {ch.array}, strategy "
             f"{ch.strategy})"]
    lines += _field("references", [", ".join(r.label for r in ch.refs)])
    lines += _field("paving", matrix_lines(ch.paving))
    lines += _field("paving origin", [_vector(ch.paving_origin)])
    lines += _field("fitting", matrix_lines(ch.fitting))
    lines += _field("pattern", [
        " x ".join(str(s) for s in ch.pattern_sizes) or "single cell"])
    d = ch.diagnostics
    if d is not None:
        o = d.overlap
        overlap = o.kind
        if o.first is not None:
            overlap += (f" r={_vector(o.first)} r'={_vector(o.second)} "
                        f"cell={_vector(o.cell)}")
        lines += _field("overlap", [overlap])
        lines += _field("overhead", [
            f"{d.overhead_ratio or 'n/a'} (asymptotic "
            f"{d.overhead_asymptotic or 'n/a'})"])
        lines += _field("paving shape",
                        ["ok" if d.paving_shape_ok else
                         "not a permuted diagonal"])
    lines.append("")
    rows = []
    for ref in ch.refs:
        phi = matrix_lines(ref.phi.matrix)
        rows.append((ref.label, ref.access, ref.text, phi[0],
                     _vector(ref.phi.shift)))
        rows += [("", "", "", line, "") for line in phi[1:]]
    lines += _table(("ref", "access", "source", "phi", "shift"), rows)
    return lines


def render_report(doc: SpecDocument) -> str:
    """Report text for doc, starting with a version line."""
    lines = [f"areole {__version__}",
             f"source {doc.source}, function {doc.function}"]
    if doc.parameters:
        lines.append("parameters " + ", ".join(
            f"{k}={v}" for k, v in doc.parameters.items()))
    lines.append("")
    lines.append("Repetition space")
    lines += [f"  {r.counter} in [{r.lower}, {r.upper}]"
              for r in doc.repetition] or ["  (none)"]
    lines.append("")
    for ch in doc.channels:
        lines += channel_section(ch)
        lines.append("")
    for pc in doc.parametric_channels:
        lines.append(f"Parametric channel of {pc.array} "
                     f"({', '.join(pc.refs)})")
        lines += _field("combined", ["[" + " ".join(r) + "]"
                                     for r in pc.combined])
        lines += _field("echelon form", ["[" + " ".join(r) + "]"
                                         for r in pc.echelon_form])
        lines += [f"  where {c}" for c in pc.conditions]
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"
