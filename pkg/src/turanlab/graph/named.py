"""Small named graphs.

Conventions: ``path(k)`` has k vertices, ``cycle(k)`` k edges, ``star(k)``
k leaves around centre 0, ``matching(k)`` k disjoint edges.
"""

from __future__ import annotations

from collections.abc import Sequence

from turanlab.graph.core import Graph, check_order


def empty(n: int) -> Graph:
    return Graph.empty(n)


def complete(n: int) -> Graph:
    check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)])


def star(k: int) -> Graph:
    if k < 1:
        raise ValueError("a star needs at least one leaf")
    return Graph.from_edges(k + 1, ((0, leaf) for leaf in range(1, k + 1)))


def matching(k: int) -> Graph:
    return Graph.from_edges(2 * k, ((2 * i, 2 * i + 1) for i in range(k)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; classes occupy consecutive label blocks."""
    if any(size < 0 for size in sizes):
        raise ValueError("class sizes must be non-negative")
    n = sum(sizes)
    check_order(n)
    full = (1 << n) - 1
    rows: list[int] = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, tuple(rows))


def subdivided_star(r: int) -> Graph:
    """Star with ``r`` legs of length two: centre 0, middles 1..r, tips r+1..2r."""
    if r < 1:
        raise ValueError("a subdivided star needs at least one leg")
    edges = [(0, i) for i in range(1, r + 1)] + [(i, i + r) for i in range(1, r + 1)]
    return Graph.from_edges(2 * r + 1, edges)


__all__ = [
    "complete",
    "complete_multipartite",
    "cycle",
    "empty",
    "matching",
    "path",
    "star",
    "subdivided_star",
]
