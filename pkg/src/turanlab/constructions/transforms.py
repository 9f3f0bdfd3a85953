"""Blow-ups and vertex splits."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from turanlab.config.settings import settings
from turanlab.constructions.builders import Construction
from turanlab.errors import ConstructionError
from turanlab.graph.canonical import canonical_form
from turanlab.graph.core import Graph, check_order
from turanlab.graph.family import GraphFamily
from turanlab.observability._logging import get_logger
from turanlab.parallel import fan_out


log = get_logger(__name__)


def blow_up_construction(h: Graph, q: int) -> Construction:
    """Replace every edge of ``h`` by a q-clique with fresh inner vertices.

    Original vertices keep their labels; the ``q - 2`` new vertices of each
    edge are appended in lexicographic edge order. New vertices of one edge
    are interchangeable.
    """
    if q < 2:
        raise ConstructionError(f"blow-up clique size must be >= 2, got {q}", details={"q": q})
    extra = q - 2
    n = h.n + h.num_edges * extra
    check_order(n)

    edges: list[tuple[int, int]] = list(h.edges)
    groups: list[tuple[int, ...]] = []
    next_label = h.n
    for u, v in h.edges:
        fresh = tuple(range(next_label, next_label + extra))
        next_label += extra
        clique = (u, v, *fresh)
        edges.extend((a, b) for a, b in combinations(clique, 2) if (a, b) != (u, v))
        if len(fresh) > 1:
            groups.append(fresh)

    return Construction(
        graph=Graph.from_edges(n, edges),
        symmetry=tuple(groups),
        label=f"blowup(q={q})",
    )


def blow_up(h: Graph, q: int) -> Graph:
    return blow_up_construction(h, q).graph


def vertex_split(h: Graph, u_set: Iterable[int]) -> Graph:
    """Replace each ``v`` in ``u_set`` by ``d(v)`` independent copies, one per neighbour.

    Unsplit vertices come first in ascending order, then the copies in
    lexicographic order of the edge they serve.
    """
    split = set(u_set)
    for v in split:
        if not 0 <= v < h.n:
            raise ConstructionError(f"vertex {v} outside 0..{h.n - 1}", details={"vertex": v})

    label: dict[tuple[int, int], int] = {}
    kept = [v for v in range(h.n) if v not in split]
    for index, v in enumerate(kept):
        label[(v, v)] = index
    next_label = len(kept)

    def endpoint(v: int, other: int) -> int:
        nonlocal next_label
        key = (v, v) if v not in split else (v, other)
        if key not in label:
            label[key] = next_label
            next_label += 1
        return label[key]

    new_edges = [(endpoint(u, v), endpoint(v, u)) for u, v in h.edges]
    return Graph.from_edges(next_label, new_edges)


def _split_chunk(job: tuple[Graph, list[int]]) -> list[Graph]:
    h, masks = job
    splittable = [v for v in range(h.n) if h.degree(v) >= 2]
    found: dict[str, Graph] = {}
    for mask in masks:
        chosen = [v for bit, v in enumerate(splittable) if mask >> bit & 1]
        g = vertex_split(h, chosen)
        found.setdefault(canonical_form(g), g)
    return list(found.values())


def split_family(h: Graph, workers: int = 1) -> GraphFamily:
    """All graphs obtained from ``h`` by splitting some vertex subset, up to isomorphism.

    Splitting a vertex of degree <= 1 never changes the isomorphism type,
    so only subsets of the higher-degree vertices are enumerated.
    """
    cap = settings.graph.split_cap
    if h.n > cap:
        raise ConstructionError(
            f"split family refused for {h.n} vertices (cap {cap})",
            code="split_cap_exceeded",
            details={"n": h.n, "cap": cap},
        )

    splittable = sum(1 for v in range(h.n) if h.degree(v) >= 2)
    masks = list(range(1 << splittable))
    chunk_count = max(1, min(workers, len(masks)))
    chunks = [(h, masks[i::chunk_count]) for i in range(chunk_count)]

    family = GraphFamily()
    for graphs in fan_out(_split_chunk, chunks, workers):
        for g in graphs:
            family.add(g)

    log.debug("split_family_built", n=h.n, edges=h.num_edges, members=len(family))
    return family


__all__ = [
    "blow_up",
    "blow_up_construction",
    "split_family",
    "vertex_split",
]
