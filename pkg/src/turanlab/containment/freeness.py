"""Family freeness checks."""

from __future__ import annotations

from dataclasses import dataclass

from turanlab.containment.search import ContainmentWitness, Symmetry, contains
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily


@dataclass(frozen=True)
class FreenessResult:
    free: bool
    member: Graph | None = None
    witness: ContainmentWitness | None = None

    def __bool__(self) -> bool:
        return self.free


def is_family_free(
    g: Graph,
    family: GraphFamily,
    *,
    symmetry: Symmetry = (),
    max_nodes: int | None = None,
) -> FreenessResult:
    """True iff ``g`` contains no member; otherwise report the first member found.

    Members are tried in family order (smallest first).
    """
    for member in family:
        witness = contains(g, member, symmetry=symmetry, max_nodes=max_nodes)
        if witness is not None:
            return FreenessResult(free=False, member=member, witness=witness)
    return FreenessResult(free=True)


__all__ = ["FreenessResult", "is_family_free"]
