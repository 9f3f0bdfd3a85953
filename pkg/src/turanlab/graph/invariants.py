"""Exact graph invariants.

Chromatic and independence numbers are computed exactly by bitset branch
and bound and refused above ``GRAPH_INVARIANT_CAP`` vertices.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from turanlab.config.settings import settings
from turanlab.errors import InvariantCapExceeded
from turanlab.graph.core import Graph, iter_bits
from turanlab.observability._logging import get_logger


log = get_logger(__name__)


def _check_cap(g: Graph, invariant: str) -> None:
    cap = settings.graph.invariant_cap
    if g.n > cap:
        raise InvariantCapExceeded(
            f"exact {invariant} refused for {g.n} vertices (cap {cap})",
            details={"invariant": invariant, "n": g.n, "cap": cap},
        )


# ============================================================================
# Colouring
# ============================================================================


def is_colorable(rows: Sequence[int], mask: int, k: int) -> bool:
    """Decide whether the subgraph induced by ``mask`` is ``k``-colourable.

    DSATUR ordering; a fresh colour is only ever the next unused index.
    """
    if not mask:
        return True
    if k <= 0:
        return False
    if k == 1:
        return all(not rows[v] & mask for v in iter_bits(mask))

    classes = [0] * k

    def dfs(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        chosen = -1
        chosen_rank = (-1, -1)
        for v in iter_bits(uncolored):
            saturation = sum(1 for c in range(used) if rows[v] & classes[c])
            if saturation == k:
                return False
            rank = (saturation, (rows[v] & mask).bit_count())
            if rank > chosen_rank:
                chosen, chosen_rank = v, rank
        bit = 1 << chosen
        for c in range(min(used + 1, k)):
            if rows[chosen] & classes[c]:
                continue
            classes[c] |= bit
            if dfs(uncolored & ~bit, max(used, c + 1)):
                return True
            classes[c] &= ~bit
        return False

    return dfs(mask, 0)


def chromatic_number(g: Graph) -> int:
    _check_cap(g, "chromatic_number")
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1

    greedy = nx.greedy_color(g.to_networkx(), strategy="largest_first")
    upper = max(greedy.values()) + 1
    for k in range(2, upper):
        if is_colorable(g.rows, g.vertex_mask, k):
            return k
    return upper


# ============================================================================
# Independent sets
# ============================================================================


def independence_number(g: Graph) -> int:
    """Maximum independent set size via clique search in the complement."""
    _check_cap(g, "independence_number")
    full = g.vertex_mask
    comp = [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)]
    best = 0

    def color_bounds(cand: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append(v)
                bounds.append(color)
                avail &= ~comp[v] & ~(1 << v)
                rest &= ~(1 << v)
        return order, bounds

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        order, bounds = color_bounds(cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            expand(cand & comp[v], size + 1)
            cand &= ~(1 << v)

    expand(full, 0)
    return best


# ============================================================================
# Structure
# ============================================================================


def matching_number(g: Graph) -> int:
    return len(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bool(nx.is_connected(g.to_networkx()))


def is_forest(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bool(nx.is_forest(g.to_networkx()))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.num_edges == g.n - 1 and is_connected(g)


def is_linear_forest(g: Graph) -> bool:
    """Every component is a path (isolated vertices count as paths)."""
    return all(row.bit_count() <= 2 for row in g.rows) and is_forest(g)


@dataclass(frozen=True)
class GraphInvariants:
    """Invariant record; capped fields are ``None`` and listed in ``capped``."""

    chromatic_number: int | None
    independence_number: int | None
    matching_number: int
    degree_sequence: tuple[int, ...]
    is_connected: bool
    is_tree: bool
    is_linear_forest: bool
    capped: tuple[str, ...] = ()


def invariants(g: Graph) -> GraphInvariants:
    capped: list[str] = []
    chi: int | None
    alpha: int | None
    try:
        chi = chromatic_number(g)
    except InvariantCapExceeded:
        chi = None
        capped.append("chromatic_number")
    try:
        alpha = independence_number(g)
    except InvariantCapExceeded:
        alpha = None
        capped.append("independence_number")
    if capped:
        log.info("invariants_capped", n=g.n, capped=capped)

    return GraphInvariants(
        chromatic_number=chi,
        independence_number=alpha,
        matching_number=matching_number(g),
        degree_sequence=g.degree_sequence(),
        is_connected=is_connected(g),
        is_tree=is_tree(g),
        is_linear_forest=is_linear_forest(g),
        capped=tuple(capped),
    )


__all__ = [
    "GraphInvariants",
    "chromatic_number",
    "independence_number",
    "invariants",
    "is_colorable",
    "is_connected",
    "is_forest",
    "is_linear_forest",
    "is_tree",
    "matching_number",
]
