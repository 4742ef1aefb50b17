#!/usr/bin/python3
"""
Grouping of references into channels.

References to the same array move through the array in lockstep only when
their paving matrices coincide; each distinct (array, paving) pair is a
channel of its own.
"""
from typing import Dict, List, Mapping, Sequence, Tuple
from areole.front.affine import bind
from areole.front.references import ArrayReference


def partition_by_paving(refs: Sequence[ArrayReference],
                        bindings: Mapping[str, int] = None
                        ) -> List[List[ArrayReference]]:
    """
    Group references by array and exact paving matrix.

    Groups come in the textual order of their first access, references
    inside a group by occurrence. Parameters are substituted before the
    comparison, so that N and its bound value compare equal.
    """
    groups: Dict[Tuple, List[ArrayReference]] = {}
    for ref in sorted(refs, key=lambda r: r.index):
        paving = ref.paving.applyfunc(lambda e: bind(e, bindings or {}))
        groups.setdefault((ref.array.name, paving), []).append(ref)
    return [sorted(g, key=lambda r: r.occurrence) for g in groups.values()]
