"""Joins and disjoint unions."""

from __future__ import annotations

from turanlab.graph.core import Graph, check_order


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """``a`` keeps labels ``0..a.n-1``; ``b`` is shifted by ``a.n``."""
    check_order(a.n + b.n)
    return Graph(a.n + b.n, a.rows + tuple(row << a.n for row in b.rows))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    check_order(a.n + b.n)
    a_side = a.vertex_mask
    b_side = b.vertex_mask << a.n
    rows = tuple(row | b_side for row in a.rows) + tuple(row << a.n | a_side for row in b.rows)
    return Graph(a.n + b.n, rows)


def k_copies(h: Graph, k: int) -> Graph:
    """``k`` vertex-disjoint copies of ``h``; zero copies is the null graph."""
    if k < 0:
        raise ValueError("copy count must be non-negative")
    check_order(h.n * k)
    rows: list[int] = []
    for copy in range(k):
        shift = copy * h.n
        rows.extend(row << shift for row in h.rows)
    return Graph(h.n * k, tuple(rows))


def union_all(graphs: list[Graph]) -> Graph:
    result = Graph.empty(0)
    for g in graphs:
        result = disjoint_union(result, g)
    return result


def join_all(graphs: list[Graph]) -> Graph:
    result = Graph.empty(0)
    for g in graphs:
        result = join(result, g)
    return result


__all__ = ["disjoint_union", "join", "join_all", "k_copies", "union_all"]
