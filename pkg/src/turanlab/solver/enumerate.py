"""Exact ex(n, F) by level-wise enumeration of F-free graphs.

Level ``e`` holds one representative of every isomorphism class of F-free
graphs on ``n`` vertices with ``e`` edges. Level ``e + 1`` comes from adding
one non-edge (one per orbit of the parent's automorphisms) to each
representative; freeness is closed under edge deletion, so every F-free
graph is reached. The last non-empty level is the extremal level, and each
of its graphs is automatically edge-maximal.
"""

from __future__ import annotations

import time
from collections.abc import Sequence

from turanlab.graph.canonical import CanonicalKey, rows_key_with_automorphisms
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.observability._metrics import searches_in_progress
from turanlab.solver.common import (
    BudgetClock,
    OutOfBudget,
    check_family,
    degenerate_result,
    family_key,
    finalize_witnesses,
    free_after_adding,
    record_run,
)
from turanlab.solver.models import ExtremalResult, SearchBudget, SearchStats, SolverMode


Rows = tuple[int, ...]
Level = dict[CanonicalKey, tuple[Rows, list[list[int]]]]


def _non_edge_orbits(rows: Rows, generators: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """One non-edge per orbit under the given automorphisms."""
    n = len(rows)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not rows[u] >> v & 1]
    parent = {pair: pair for pair in non_edges}

    def find(pair: tuple[int, int]) -> tuple[int, int]:
        while parent[pair] != pair:
            parent[pair] = parent[parent[pair]]
            pair = parent[pair]
        return pair

    for gen in generators:
        for u, v in non_edges:
            image = (min(gen[u], gen[v]), max(gen[u], gen[v]))
            a, b = find((u, v)), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [pair for pair in non_edges if find(pair) == pair]


def ex_enumerate(
    n: int,
    family: GraphFamily,
    budget: SearchBudget | None = None,
    *,
    witness_cap: int | None = None,
) -> ExtremalResult:
    """ex(n, family) and every extremal graph, by exhaustive enumeration.

    Practical up to about ten vertices. An exhausted budget returns a result
    with ``complete=False`` whose ``max_edges`` is only a lower bound.
    """
    started = time.perf_counter()
    members = check_family(n, family)
    if not members:
        return record_run(degenerate_result(n, family, SolverMode.ENUMERATE, started))

    budget = budget or SearchBudget.from_settings()
    clock = BudgetClock.from_budget(budget)
    stats = SearchStats()

    empty_rows: Rows = (0,) * n
    key, generators = rows_key_with_automorphisms(empty_rows)
    level: Level = {key: (empty_rows, generators)}
    best_level, best_edges = level, 0
    complete = True

    searches_in_progress.inc()
    try:
        while level:
            next_level: Level = {}
            try:
                for rows, gens in level.values():
                    for u, v in _non_edge_orbits(rows, gens):
                        clock.tick()
                        grown = free_after_adding(rows, members, u, v)
                        if grown is None:
                            stats.prunes_by_containment += 1
                            continue
                        grown_key, grown_gens = rows_key_with_automorphisms(grown.rows)
                        if grown_key in next_level:
                            stats.iso_rejections += 1
                            continue
                        next_level[grown_key] = (grown.rows, grown_gens)
            except OutOfBudget:
                complete = False
            if next_level:
                best_level, best_edges = next_level, best_edges + 1
            if not complete:
                break
            level = next_level
    finally:
        searches_in_progress.dec()

    stats.nodes_expanded = clock.nodes
    stats.elapsed_seconds = time.perf_counter() - started
    extremal, overflow = finalize_witnesses((Graph(n, rows) for rows, _ in best_level.values()), witness_cap)
    return record_run(
        ExtremalResult(
            n=n,
            family_key=family_key(family),
            max_edges=best_edges,
            extremal=extremal,
            stats=stats,
            mode=SolverMode.ENUMERATE,
            complete=complete,
            witness_overflow=overflow,
        )
    )


__all__ = ["ex_enumerate"]
