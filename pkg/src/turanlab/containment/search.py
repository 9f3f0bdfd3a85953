"""Subgraph containment (monomorphism) by ordered backtracking.

Pattern vertices are matched most-constrained first: highest degree to
start each component, then the vertex with the most already-placed
neighbours. Host candidates are the intersection of the placed neighbours'
host rows, filtered by degree. Declared host symmetry groups (pairwise
twins) let the search try only one unused member of each group per node.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from turanlab.config.settings import settings
from turanlab.containment.cache import query_cache
from turanlab.errors import BudgetExceeded
from turanlab.graph.canonical import automorphism_generators
from turanlab.graph.core import Graph, iter_bits
from turanlab.observability._logging import get_logger
from turanlab.observability._metrics import containment_nodes_total, containment_queries_total


log = get_logger(__name__)

Symmetry = Sequence[Sequence[int]]


@dataclass(frozen=True)
class ContainmentWitness:
    """``mapping[i]`` is the host vertex assigned to pattern vertex ``i``."""

    mapping: tuple[int, ...]

    def to_list(self) -> list[int]:
        return list(self.mapping)


# ============================================================================
# Search plan
# ============================================================================


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]
    back: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    isolated: tuple[int, ...]


@lru_cache(maxsize=1024)
def _plan(pattern: Graph, seed: tuple[int, ...] = ()) -> _Plan:
    placed: list[int] = list(seed)
    placed_mask = 0
    for v in seed:
        placed_mask |= 1 << v
    remaining = [v for v in range(pattern.n) if pattern.rows[v] and v not in seed]

    while remaining:
        best = max(
            remaining,
            key=lambda v: ((pattern.rows[v] & placed_mask).bit_count(), pattern.degree(v), -v),
        )
        remaining.remove(best)
        placed.append(best)
        placed_mask |= 1 << best

    position = {v: i for i, v in enumerate(placed)}
    back = tuple(
        tuple(sorted(position[u] for u in iter_bits(pattern.rows[v]) if position.get(u, i) < i))
        for i, v in enumerate(placed)
    )
    return _Plan(
        order=tuple(placed),
        back=back,
        degrees=tuple(pattern.degree(v) for v in placed),
        isolated=tuple(v for v in range(pattern.n) if not pattern.rows[v]),
    )


@lru_cache(maxsize=1024)
def _edge_orbit_representatives(pattern: Graph) -> tuple[tuple[int, int], ...]:
    """One edge per orbit of the pattern's automorphism group on edges."""
    parent = {edge: edge for edge in pattern.edges}

    def find(edge: tuple[int, int]) -> tuple[int, int]:
        while parent[edge] != edge:
            parent[edge] = parent[parent[edge]]
            edge = parent[edge]
        return edge

    for gen in automorphism_generators(pattern):
        for a, b in pattern.edges:
            image = (min(gen[a], gen[b]), max(gen[a], gen[b]))
            root_a, root_b = find((a, b)), find(image)
            if root_a != root_b:
                parent[max(root_a, root_b)] = min(root_a, root_b)
    return tuple(edge for edge in pattern.edges if find(edge) == edge)


def _group_index(n: int, symmetry: Symmetry) -> list[int]:
    group = [-1] * n
    for index, members in enumerate(symmetry):
        for v in members:
            group[v] = index
    return group


def _degree_masks(host: Graph) -> list[int]:
    """``masks[d]`` = host vertices of degree >= d."""
    top = max((row.bit_count() for row in host.rows), default=0)
    masks = [0] * (top + 2)
    for v, row in enumerate(host.rows):
        masks[row.bit_count()] |= 1 << v
    for d in range(top, -1, -1):
        masks[d] |= masks[d + 1]
    return masks


class _Budget(Exception):
    pass


class _Matcher:
    def __init__(self, host: Graph, symmetry: Symmetry, max_nodes: int) -> None:
        self.host = host
        self.rows = host.rows
        self.group = _group_index(host.n, symmetry)
        self.degree_masks = _degree_masks(host)
        self.max_nodes = max_nodes
        self.nodes = 0

    def run(self, plan: _Plan, seed_images: tuple[int, ...] = ()) -> list[int] | None:
        order, back, degrees = plan.order, plan.back, plan.degrees
        rows, group, degree_masks = self.rows, self.group, self.degree_masks
        images = [-1] * len(order)
        top_degree = len(degree_masks) - 1

        def extend(i: int, used: int) -> bool:
            if i == len(order):
                return True
            if degrees[i] > top_degree:
                return False
            cand = degree_masks[degrees[i]] & ~used
            for j in back[i]:
                cand &= rows[images[j]]
            if i < len(seed_images):
                cand &= 1 << seed_images[i]
            tried: set[int] = set()
            for w in iter_bits(cand):
                g = group[w]
                if g >= 0:
                    if g in tried:
                        continue
                    tried.add(g)
                self.nodes += 1
                if self.nodes > self.max_nodes:
                    raise _Budget
                images[i] = w
                if extend(i + 1, used | 1 << w):
                    return True
            return False

        if not extend(0, 0):
            return None

        mapping = [-1] * (len(order) + len(plan.isolated))
        used = 0
        for i, v in enumerate(order):
            mapping[v] = images[i]
            used |= 1 << images[i]
        spare = iter_bits(self.host.vertex_mask & ~used)
        for v in plan.isolated:
            mapping[v] = next(spare)
        return mapping


def _quick_reject(host: Graph, pattern: Graph) -> bool:
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return True
    host_degrees = host.degree_sequence()
    return any(d > h for d, h in zip(pattern.degree_sequence(), host_degrees, strict=False))


def _budget_error(host: Graph, pattern: Graph, nodes: int, max_nodes: int) -> BudgetExceeded:
    log.warning(
        "containment_budget_exceeded",
        host_n=host.n,
        pattern_n=pattern.n,
        nodes=nodes,
        max_nodes=max_nodes,
    )
    return BudgetExceeded(
        f"containment search exceeded {max_nodes} nodes",
        details={"host_n": host.n, "pattern_n": pattern.n, "max_nodes": max_nodes},
    )


# ============================================================================
# Public API
# ============================================================================


def contains(
    host: Graph,
    pattern: Graph,
    *,
    symmetry: Symmetry = (),
    max_nodes: int | None = None,
    use_cache: bool = True,
) -> ContainmentWitness | None:
    """Return an edge-preserving injection of ``pattern`` into ``host``, or ``None``.

    ``None`` is an exhaustive proof of absence. Running out of nodes raises
    :class:`BudgetExceeded` instead.
    """
    budget = max_nodes or settings.containment.max_nodes
    if _quick_reject(host, pattern):
        containment_queries_total.labels(result="absent").inc()
        return None

    cache_key = (host.rows, pattern.rows, tuple(tuple(g) for g in symmetry))
    if use_cache:
        hit, cached = query_cache.get(cache_key)
        if hit:
            containment_queries_total.labels(result="cached").inc()
            return cached

    matcher = _Matcher(host, symmetry, budget)
    try:
        mapping = matcher.run(_plan(pattern))
    except _Budget:
        containment_queries_total.labels(result="budget").inc()
        raise _budget_error(host, pattern, matcher.nodes, budget) from None
    finally:
        containment_nodes_total.inc(matcher.nodes)

    witness = ContainmentWitness(tuple(mapping)) if mapping is not None else None
    containment_queries_total.labels(result="found" if witness else "absent").inc()
    if use_cache:
        query_cache.put(cache_key, witness)
    return witness


def contains_through_edge(
    host: Graph,
    pattern: Graph,
    u: int,
    v: int,
    *,
    max_nodes: int | None = None,
) -> ContainmentWitness | None:
    """Like :func:`contains`, restricted to embeddings that use host edge ``uv``."""
    if not host.has_edge(u, v):
        return None
    budget = max_nodes or settings.containment.max_nodes
    if _quick_reject(host, pattern):
        return None

    matcher = _Matcher(host, (), budget)
    try:
        for a, b in _edge_orbit_representatives(pattern):
            plan = _plan(pattern, (a, b))
            for seed in ((u, v), (v, u)):
                mapping = matcher.run(plan, seed)
                if mapping is not None:
                    containment_queries_total.labels(result="found").inc()
                    return ContainmentWitness(tuple(mapping))
    except _Budget:
        containment_queries_total.labels(result="budget").inc()
        raise _budget_error(host, pattern, matcher.nodes, budget) from None
    finally:
        containment_nodes_total.inc(matcher.nodes)

    containment_queries_total.labels(result="absent").inc()
    return None


def validate_witness(host: Graph, pattern: Graph, witness: ContainmentWitness | Sequence[int]) -> bool:
    """Independently re-check that ``witness`` is an edge-preserving injection."""
    mapping = list(witness.mapping if isinstance(witness, ContainmentWitness) else witness)
    if len(mapping) != pattern.n:
        return False
    if len(set(mapping)) != len(mapping):
        return False
    if any(not 0 <= w < host.n for w in mapping):
        return False
    return all(host.has_edge(mapping[a], mapping[b]) for a, b in pattern.edges)


__all__ = [
    "ContainmentWitness",
    "contains",
    "contains_through_edge",
    "validate_witness",
]
