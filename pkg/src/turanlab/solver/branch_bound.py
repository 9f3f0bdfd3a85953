"""Exact ex(n, F) by branch-and-bound over vertex pairs.

Pairs are decided in lexicographic order, "include" first. An include is
committed only when the new edge completes no member of F (incremental
containment through that edge), so every committed partial graph is F-free.

Symmetry breaking: vertex 0 is taken to be a vertex of maximum degree
``d`` with neighbourhood ``{1, ..., d}``, and every other vertex is capped
at degree ``d``. Each ``d`` is an independent subtree task. Within a task,
states at the first ``memo_rows`` row boundaries are memoised by their
canonical form under the partition [decided vertices, undecided vertices].
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from turanlab.config.settings import settings
from turanlab.graph.canonical import CanonicalKey, rows_key
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.observability._logging import get_logger
from turanlab.observability._metrics import searches_in_progress
from turanlab.parallel import fan_out
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


log = get_logger(__name__)

Rows = tuple[int, ...]


def greedy_lower_bound(n: int, members: list[Graph]) -> Graph:
    """Maximal F-free graph built by adding pairs in lexicographic order."""
    g = Graph.empty(n)
    for u in range(n):
        for v in range(u + 1, n):
            grown = free_after_adding(g.rows, members, u, v)
            if grown is not None:
                g = grown
    return g


@dataclass(frozen=True)
class _Task:
    n: int
    members: tuple[Graph, ...]
    degree_cap: int
    floor: int
    all_extremal: bool
    max_nodes: int
    deadline: float | None
    memo_rows: int
    witness_cap: int


@dataclass
class _TaskOutcome:
    degree_cap: int
    best: int
    witnesses: list[Rows] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)
    complete: bool = True
    overflow: bool = False


class _BranchSearch:
    def __init__(self, task: _Task) -> None:
        n = task.n
        self.task = task
        self.n = n
        self.cap = task.degree_cap
        self.pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        # Index of the first pair of row ``b`` -> ``b`` rows fully decided.
        self.boundaries: dict[int, int] = {}
        index = 0
        for b in range(n - 1):
            if b:
                self.boundaries[index] = b
            index += n - 1 - b
        self.rows = [0] * n
        self.degrees = [0] * n
        self.best = task.floor
        self.found: dict[CanonicalKey, Rows] = {}
        self.memo: set[CanonicalKey] = set()
        self.clock = BudgetClock(task.max_nodes, task.deadline)
        self.stats = SearchStats()
        self.overflow = False

    # -- state changes -------------------------------------------------

    def _try_add(self, u: int, v: int) -> bool:
        if free_after_adding(self.rows, self.task.members, u, v) is None:
            self.stats.prunes_by_containment += 1
            return False
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u
        self.degrees[u] += 1
        self.degrees[v] += 1
        return True

    def _remove(self, u: int, v: int) -> None:
        self.rows[u] &= ~(1 << v)
        self.rows[v] &= ~(1 << u)
        self.degrees[u] -= 1
        self.degrees[v] -= 1

    # -- bounding ------------------------------------------------------

    def _bound(self, k: int, edges: int) -> int:
        """Edges plus what the undecided pairs and the degree cap still allow."""
        n, cap = self.n, self.cap
        if k == len(self.pairs):
            return edges
        i, j = self.pairs[k]
        remaining = len(self.pairs) - k
        later = n - i - 1
        degree_room = 0
        for v in range(n):
            if v < i:
                open_pairs = 0
            elif v == i:
                open_pairs = n - j
            else:
                open_pairs = later - 1 + (1 if v >= j else 0)
            degree_room += min(cap, self.degrees[v] + open_pairs)
        return min(edges + remaining, degree_room // 2)

    def _pruned(self, bound: int) -> bool:
        if self.task.all_extremal:
            return bound < self.best
        return bound <= self.best

    # -- search --------------------------------------------------------

    def _record(self, edges: int) -> None:
        if edges > self.best:
            self.best = edges
            self.found.clear()
            self.overflow = False
        elif edges < self.best or (not self.task.all_extremal and self.found):
            return
        key = rows_key(self.rows)
        if key in self.found:
            return
        if len(self.found) >= self.task.witness_cap:
            self.overflow = True
            return
        self.found[key] = tuple(self.rows)

    def _descend(self, k: int, edges: int) -> None:
        self.clock.tick()
        if k == len(self.pairs):
            self._record(edges)
            return
        if self._pruned(self._bound(k, edges)):
            self.stats.prunes_by_bound += 1
            return

        decided = self.boundaries.get(k)
        if decided is not None and decided <= self.task.memo_rows:
            key = rows_key(self.rows, [range(decided), range(decided, self.n)])
            if key in self.memo:
                self.stats.iso_rejections += 1
                return
            self.memo.add(key)

        u, v = self.pairs[k]
        if self.degrees[u] < self.cap and self.degrees[v] < self.cap and self._try_add(u, v):
            self._descend(k + 1, edges + 1)
            self._remove(u, v)
        self._descend(k + 1, edges)

    def run(self) -> _TaskOutcome:
        started = time.perf_counter()
        complete = True
        feasible = all(self._try_add(0, j) for j in range(1, self.cap + 1))
        if feasible:
            try:
                self._descend(self.n - 1, self.cap)
            except OutOfBudget:
                complete = False
        self.stats.nodes_expanded = self.clock.nodes
        self.stats.elapsed_seconds = time.perf_counter() - started
        return _TaskOutcome(
            degree_cap=self.cap,
            best=self.best,
            witnesses=list(self.found.values()),
            stats=self.stats,
            complete=complete,
            overflow=self.overflow,
        )


def _run_task(task: _Task) -> _TaskOutcome:
    return _BranchSearch(task).run()


def ex_branch_bound(
    n: int,
    family: GraphFamily,
    budget: SearchBudget | None = None,
    *,
    all_extremal: bool = False,
    witness_cap: int | None = None,
    memo_rows: int | None = None,
) -> ExtremalResult:
    """ex(n, family) by branch-and-bound.

    With ``all_extremal`` every extremal isomorphism class is collected;
    otherwise a single witness (the canonically smallest found) is kept.
    The node budget is shared evenly between the maximum-degree subtrees.
    """
    started = time.perf_counter()
    members = check_family(n, family)
    if not members:
        return record_run(degenerate_result(n, family, SolverMode.BRANCH_BOUND, started))

    budget = budget or SearchBudget.from_settings()
    cap = witness_cap or settings.solver.witness_cap
    greedy = greedy_lower_bound(n, members)
    clock = BudgetClock.from_budget(budget, share=n)
    tasks = [
        _Task(
            n=n,
            members=tuple(members),
            degree_cap=d,
            floor=greedy.num_edges,
            all_extremal=all_extremal,
            max_nodes=clock.max_nodes,
            deadline=clock.deadline,
            memo_rows=settings.solver.memo_rows if memo_rows is None else memo_rows,
            witness_cap=cap,
        )
        for d in range(n)
    ]

    searches_in_progress.inc()
    try:
        outcomes = fan_out(_run_task, tasks, budget.workers)
    finally:
        searches_in_progress.dec()

    best = max(outcome.best for outcome in outcomes)
    witnesses: list[Graph] = [
        Graph(n, rows) for outcome in outcomes if outcome.best == best for rows in outcome.witnesses
    ]
    if best == greedy.num_edges and not all_extremal:
        witnesses.append(greedy)

    extremal, overflow = finalize_witnesses(witnesses, cap)
    overflow = overflow or any(o.overflow for o in outcomes if o.best == best)
    if not all_extremal:
        extremal = extremal[:1]

    stats = SearchStats()
    for outcome in outcomes:
        stats = stats.merged(outcome.stats)
    stats.elapsed_seconds = time.perf_counter() - started

    complete = all(outcome.complete for outcome in outcomes)
    log.debug(
        "branch_bound_tasks",
        n=n,
        greedy=greedy.num_edges,
        best_by_degree={o.degree_cap: o.best for o in outcomes},
    )
    return record_run(
        ExtremalResult(
            n=n,
            family_key=family_key(family),
            max_edges=best,
            extremal=extremal,
            stats=stats,
            mode=SolverMode.BRANCH_BOUND,
            complete=complete,
            all_extremal=all_extremal,
            witness_overflow=overflow,
        )
    )


__all__ = ["ex_branch_bound", "greedy_lower_bound"]
