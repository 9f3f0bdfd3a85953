"""Immutable labelled simple graph with bit-packed adjacency rows."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from turanlab.config.settings import settings
from turanlab.errors import GraphSizeError, LabError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def check_order(n: int) -> None:
    """Reject vertex counts outside ``0..GRAPH_MAX_VERTICES``."""
    cap = settings.graph.max_vertices
    if n < 0 or n > cap:
        raise GraphSizeError(
            f"graph order {n} outside supported range 0..{cap}",
            details={"n": n, "max_vertices": cap},
        )


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask. Instances are
    values: every mutator returns a new graph.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.n)
        if len(self.rows) != self.n:
            raise LabError(
                f"expected {self.n} adjacency rows, got {len(self.rows)}",
                code="graph_invalid",
                phase="graph",
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise LabError(
                    f"row {v} has out-of-range bits or a self-loop",
                    code="graph_invalid",
                    phase="graph",
                )
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise LabError(
                        f"adjacency not symmetric at ({v}, {u})",
                        code="graph_invalid",
                        phase="graph",
                    )

    # ========================================================================
    # Constructors
    # ========================================================================

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list; duplicate edges collapse."""
        check_order(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise LabError(f"self-loop at {u}", code="graph_invalid", phase="graph")
            if not (0 <= u < n and 0 <= v < n):
                raise LabError(
                    f"edge ({u}, {v}) outside 0..{n - 1}", code="graph_invalid", phase="graph"
                )
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert a networkx graph; vertices are numbered in iteration order."""
        index = {node: i for i, node in enumerate(graph.nodes())}
        return cls.from_edges(
            len(index), ((index[u], index[v]) for u, v in graph.edges() if u != v)
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    # ========================================================================
    # Queries
    # ========================================================================

    @cached_property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return tuple(
            (u, v) for u in range(self.n) for v in iter_bits(self.rows[u] & ~((2 << u) - 1))
        )

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((row.bit_count() for row in self.rows), reverse=True))

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.rows) if not row]

    def twin_classes(self) -> list[tuple[int, ...]]:
        """Groups (size >= 2) of pairwise interchangeable vertices.

        Two vertices are twins when they share their open neighbourhood
        (non-adjacent twins) or their closed neighbourhood (adjacent twins).
        Swapping twins is an automorphism.
        """
        groups: dict[tuple[str, int], list[int]] = {}
        for v, row in enumerate(self.rows):
            groups.setdefault(("open", row), []).append(v)
        for v, row in enumerate(self.rows):
            groups.setdefault(("closed", row | 1 << v), []).append(v)
        classes = [tuple(members) for members in groups.values() if len(members) > 1]
        return sorted(classes)

    # ========================================================================
    # Derived graphs
    # ========================================================================

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise LabError("relabel needs a permutation of 0..n-1", code="graph_invalid", phase="graph")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new_row = 0
            for u in iter_bits(row):
                new_row |= 1 << perm[u]
            rows[perm[v]] = new_row
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``, renumbered in ascending order."""
        kept = sorted(set(vertices))
        position = {v: i for i, v in enumerate(kept)}
        keep_mask = mask_of(kept)
        rows = []
        for v in kept:
            new_row = 0
            for u in iter_bits(self.rows[v] & keep_mask):
                new_row |= 1 << position[u]
            rows.append(new_row)
        return Graph(len(kept), tuple(rows))

    def strip_isolated(self) -> Graph:
        if all(self.rows):
            return self
        return self.induced(v for v, row in enumerate(self.rows) if row)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise LabError(f"self-loop at {u}", code="graph_invalid", phase="graph")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges})"


__all__ = ["Graph", "check_order", "iter_bits", "mask_of"]
