"""Pieces shared by both extremal search procedures."""

from __future__ import annotations

import time
from collections.abc import Iterable, Sequence
from math import comb

from turanlab.config.settings import settings
from turanlab.containment.search import contains_through_edge
from turanlab.errors import HypothesisViolation, LabError
from turanlab.graph.canonical import canonical_form
from turanlab.graph.core import Graph, check_order
from turanlab.graph.family import GraphFamily
from turanlab.graph.named import complete
from turanlab.observability._logging import get_logger
from turanlab.observability._metrics import solver_nodes_total, solver_runs_total
from turanlab.solver.models import ExtremalResult, SearchBudget, SearchStats, SolverMode


log = get_logger(__name__)


class OutOfBudget(Exception):
    """Internal signal: node or time budget exhausted."""


class BudgetClock:
    """Counts nodes against ``max_nodes`` and polls the wall-clock deadline."""

    POLL_EVERY = 1024

    def __init__(self, max_nodes: int, deadline: float | None) -> None:
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0

    @classmethod
    def from_budget(cls, budget: SearchBudget, share: int = 1) -> BudgetClock:
        deadline = time.time() + budget.max_seconds if budget.max_seconds else None
        return cls(max(1, -(-budget.max_nodes // share)), deadline)

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise OutOfBudget
        if self.deadline is not None and self.nodes % self.POLL_EVERY == 0 and time.time() > self.deadline:
            raise OutOfBudget


def check_family(n: int, family: GraphFamily) -> list[Graph]:
    """Validate solver inputs; return the members that fit on ``n`` vertices."""
    check_order(n)
    if not len(family):
        raise LabError("forbidden family is empty", code="family_empty", phase="solver")
    edgeless = [g.n for g in family if g.num_edges == 0]
    if edgeless:
        raise HypothesisViolation(
            "every forbidden graph needs at least one edge",
            details={"edgeless_orders": edgeless},
        )
    return [g for g in family if g.n <= n]


def family_key(family: GraphFamily) -> list[str]:
    return [str(form) for form in family.key()]


def degenerate_result(n: int, family: GraphFamily, mode: SolverMode, started: float) -> ExtremalResult:
    """No member fits on ``n`` vertices, so K_n itself is free."""
    return ExtremalResult(
        n=n,
        family_key=family_key(family),
        max_edges=comb(n, 2),
        extremal=[str(canonical_form(complete(n)))],
        stats=SearchStats(elapsed_seconds=time.perf_counter() - started),
        mode=mode,
    )


def finalize_witnesses(graphs: Iterable[Graph], cap: int | None = None) -> tuple[list[str], bool]:
    """Canonical, sorted and capped witness strings plus the overflow flag."""
    limit = cap or settings.solver.witness_cap
    forms = sorted({str(canonical_form(g)) for g in graphs})
    return forms[:limit], len(forms) > limit


def free_after_adding(rows: Sequence[int], members: Sequence[Graph], u: int, v: int) -> Graph | None:
    """Graph with ``uv`` added, or ``None`` when that edge completes some member."""
    new_rows = list(rows)
    new_rows[u] |= 1 << v
    new_rows[v] |= 1 << u
    g = Graph(len(new_rows), tuple(new_rows))
    for member in members:
        if contains_through_edge(g, member, u, v) is not None:
            return None
    return g


def record_run(result: ExtremalResult) -> ExtremalResult:
    solver_runs_total.labels(mode=result.mode.value, status=result.status).inc()
    solver_nodes_total.labels(mode=result.mode.value).inc(result.stats.nodes_expanded)
    log.info(
        "solver_finished",
        n=result.n,
        mode=result.mode.value,
        max_edges=result.max_edges,
        witnesses=len(result.extremal),
        complete=result.complete,
        nodes=result.stats.nodes_expanded,
        elapsed=round(result.stats.elapsed_seconds, 3),
    )
    return result


__all__ = [
    "BudgetClock",
    "OutOfBudget",
    "check_family",
    "degenerate_result",
    "family_key",
    "finalize_witnesses",
    "free_after_adding",
    "record_run",
]
