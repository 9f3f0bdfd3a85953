"""Entry point for extremal-number queries.

:func:`ex` picks a procedure, consults the result cache, and in ``both``
mode runs the two procedures against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from turanlab.config.settings import settings
from turanlab.containment.freeness import is_family_free
from turanlab.errors import LabError
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.observability._logging import get_logger
from turanlab.observability._metrics import solver_runs_total
from turanlab.solver.branch_bound import ex_branch_bound
from turanlab.solver.cache import ResultCache, make_cache_key
from turanlab.solver.enumerate import ex_enumerate
from turanlab.solver.models import ExtremalResult, SearchBudget, SolverMode


log = get_logger(__name__)


@dataclass(frozen=True)
class SolverCrossCheck:
    by_enumeration: ExtremalResult
    by_branch_bound: ExtremalResult

    @property
    def decided(self) -> bool:
        return self.by_enumeration.complete and self.by_branch_bound.complete

    @property
    def agree(self) -> bool:
        return (
            self.by_enumeration.max_edges == self.by_branch_bound.max_edges
            and self.by_enumeration.extremal == self.by_branch_bound.extremal
        )


def cross_check(n: int, family: GraphFamily, budget: SearchBudget | None = None) -> SolverCrossCheck:
    """Run both procedures, collecting every extremal class from each."""
    return SolverCrossCheck(
        by_enumeration=ex_enumerate(n, family, budget),
        by_branch_bound=ex_branch_bound(n, family, budget, all_extremal=True),
    )


def _solve(n: int, family: GraphFamily, mode: SolverMode, budget: SearchBudget, all_extremal: bool) -> ExtremalResult:
    if mode is SolverMode.ENUMERATE:
        return ex_enumerate(n, family, budget)
    if mode is SolverMode.BRANCH_BOUND:
        return ex_branch_bound(n, family, budget, all_extremal=all_extremal)

    check = cross_check(n, family, budget)
    if check.decided and not check.agree:
        log.error(
            "solver_mismatch",
            n=n,
            enumerate_max=check.by_enumeration.max_edges,
            branch_bound_max=check.by_branch_bound.max_edges,
        )
        raise LabError(
            f"solvers disagree on ex({n}, F): "
            f"{check.by_enumeration.max_edges} (enumerate) vs {check.by_branch_bound.max_edges} (branch_bound)",
            code="solver_mismatch",
            phase="solver",
            details={
                "n": n,
                "family": check.by_enumeration.family_key,
                "enumerate": check.by_enumeration.extremal,
                "branch_bound": check.by_branch_bound.extremal,
            },
        )
    return check.by_enumeration if check.by_enumeration.complete else check.by_branch_bound


def ex(
    n: int,
    family: GraphFamily,
    *,
    mode: SolverMode = SolverMode.ENUMERATE,
    budget: SearchBudget | None = None,
    all_extremal: bool = False,
    cache: ResultCache | str | Path | None = None,
) -> ExtremalResult:
    """ex(n, family) with its extremal graphs.

    ``cache`` defaults to ``SOLVER_CACHE_PATH`` when set. A cached result is
    returned as stored, including the solver version that produced it.
    """
    budget = budget or SearchBudget.from_settings()
    if cache is None and settings.solver.cache_path is not None:
        cache = settings.solver.cache_path
    store = ResultCache(cache) if isinstance(cache, (str, Path)) else cache

    key = make_cache_key(n, family, mode, all_extremal or mode is not SolverMode.BRANCH_BOUND)
    if store is not None:
        cached = store.get(key)
        if cached is not None:
            solver_runs_total.labels(mode=mode.value, status="cached").inc()
            return cached

    result = _solve(n, family, mode, budget, all_extremal)
    if store is not None:
        store.put(key, result)
    return result


def lower_bound_from_construction(n: int, family: GraphFamily, construction: Graph) -> int | None:
    """Edge count of ``construction`` when it is a family-free graph on ``n`` vertices."""
    if construction.n != n:
        raise LabError(
            f"construction has {construction.n} vertices, expected {n}",
            code="construction_order_mismatch",
            phase="solver",
            details={"n": n, "construction_n": construction.n},
        )
    if not is_family_free(construction, family):
        return None
    return construction.num_edges


def is_edge_maximal(g: Graph, family: GraphFamily) -> bool:
    """Every absent edge, once added, creates some member of ``family``."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and is_family_free(g.add_edge(u, v), family):
                return False
    return True


__all__ = [
    "SolverCrossCheck",
    "cross_check",
    "ex",
    "is_edge_maximal",
    "lower_bound_from_construction",
]
