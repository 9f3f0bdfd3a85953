"""Isomorphism-deduplicated graph families."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from turanlab.graph.canonical import CanonicalForm, canonical_form
from turanlab.graph.core import Graph
from turanlab.graph.graph6 import graph6_decode


class GraphFamily:
    """Set of graphs up to isomorphism.

    Iteration is sorted by (order, edge count, canonical string), so two
    families with the same members always list them identically.
    """

    def __init__(self, graphs: Iterable[Graph] = ()) -> None:
        self._members: dict[CanonicalForm, Graph] = {}
        for g in graphs:
            self.add(g)

    @classmethod
    def from_graph6(cls, lines: Iterable[str]) -> GraphFamily:
        return cls(graph6_decode(line) for line in lines if line.strip())

    def add(self, g: Graph) -> bool:
        """Insert ``g`` unless an isomorphic member exists; report insertion."""
        form = canonical_form(g)
        if form in self._members:
            return False
        self._members[form] = g
        return True

    def _order(self) -> list[CanonicalForm]:
        return sorted(
            self._members,
            key=lambda form: (self._members[form].n, self._members[form].num_edges, form),
        )

    def __iter__(self) -> Iterator[Graph]:
        return (self._members[form] for form in self._order())

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, g: object) -> bool:
        return isinstance(g, Graph) and canonical_form(g) in self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return set(self._members) == set(other._members)

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"GraphFamily({list(self.canonical_strings())})"

    def canonical_strings(self) -> list[CanonicalForm]:
        return self._order()

    def key(self) -> tuple[CanonicalForm, ...]:
        """Order-independent identity of the family (sorted canonical strings)."""
        return tuple(sorted(self._members))

    def min_order(self) -> int:
        return min((g.n for g in self._members.values()), default=0)

    def members(self) -> list[Graph]:
        return list(self)


__all__ = ["GraphFamily"]
