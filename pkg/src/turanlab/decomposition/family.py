"""Decomposition families.

A graph ``M`` (no isolated vertices) satisfies the embedding condition for a
forbidden family when some member ``L`` fits into
``(M ∪ I_t) ⊗ K_{p-1}(t, ..., t)`` with ``t = |V(L)|``; the host only grows
with ``t``, so that single ``t`` decides the condition. Members of the
decomposition family are the graphs satisfying the condition none of whose
one-edge-smaller subgraphs do.

Candidates: any embedding of ``L`` sends some vertex set ``S`` into
``M ∪ I_t`` and the rest into the ``p - 1`` classes, so ``L - S`` is
``(p-1)``-colourable and ``L[S]`` (isolated vertices dropped) is a subgraph
of ``M``. Every member is therefore one of those ``L[S]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from turanlab.config.settings import settings
from turanlab.constructions.transforms import blow_up, split_family
from turanlab.containment.product import contains_in_product
from turanlab.containment.search import contains
from turanlab.errors import BudgetExceeded, HypothesisViolation, LabError
from turanlab.graph.core import Graph, iter_bits
from turanlab.graph.family import GraphFamily
from turanlab.graph.invariants import chromatic_number, is_colorable
from turanlab.observability._logging import get_logger
from turanlab.parallel import fan_out


log = get_logger(__name__)


@dataclass(frozen=True)
class DecompositionQuery:
    forbidden: GraphFamily
    p: int | None = None
    candidate_vertex_cap: int | None = None
    exhaustive: bool = False
    workers: int = 1


@dataclass
class DecompositionResult:
    """Computed family; ``authoritative`` is false when any candidate went undecided."""

    family: GraphFamily
    p: int
    authoritative: bool = True
    candidates: int = 0
    undecided: list[Graph] = field(default_factory=list)


# ============================================================================
# Threshold and membership
# ============================================================================


def family_threshold(family: GraphFamily) -> int:
    """Minimum chromatic number over the family, minus one."""
    if not len(family):
        raise LabError("threshold of an empty family is undefined", code="family_empty", phase="decomposition")
    return min(chromatic_number(member) for member in family) - 1


def _embeds(m: Graph, family: GraphFamily, p: int) -> bool:
    return any(contains_in_product(m, p, member.n, member) is not None for member in family)


def is_decomposition_member(m: Graph, family: GraphFamily, p: int) -> bool:
    """Embedding condition holds for ``m`` and fails after deleting any one edge."""
    if p < 2:
        raise HypothesisViolation(f"decomposition families need p >= 2, got {p}", details={"p": p})
    m = m.strip_isolated()
    if not _embeds(m, family, p):
        return False
    return not any(_embeds(m.remove_edge(u, v).strip_isolated(), family, p) for u, v in m.edges)


# ============================================================================
# Candidate generation
# ============================================================================


def _subset_candidates(member: Graph, p: int) -> GraphFamily:
    """Isolated-free ``L[S]`` over vertex sets ``S`` whose complement is (p-1)-colourable."""
    found = GraphFamily()
    full = member.vertex_mask
    for s_mask in range(1 << member.n):
        if not is_colorable(member.rows, full & ~s_mask, p - 1):
            continue
        part = member.induced(iter_bits(s_mask)).strip_isolated()
        if part.num_edges:
            found.add(part)
    return found


def _edge_subset_candidates(member: Graph) -> GraphFamily:
    found = GraphFamily()
    edges = member.edges
    for size in range(1, len(edges) + 1):
        for chosen in combinations(edges, size):
            found.add(Graph.from_edges(member.n, chosen).strip_isolated())
    return found


def _check_candidate(job: tuple[Graph, GraphFamily, int]) -> tuple[Graph, bool | None]:
    m, family, p = job
    try:
        return m, is_decomposition_member(m, family, p)
    except BudgetExceeded:
        return m, None


def decomposition_family_general(query: DecompositionQuery) -> DecompositionResult:
    """Decomposition family straight from the definition."""
    family = query.forbidden
    p = query.p if query.p is not None else family_threshold(family)
    if p < 2:
        raise HypothesisViolation(f"decomposition families need p >= 2, got {p}", details={"p": p})

    vertex_cap = query.candidate_vertex_cap or settings.decomposition.candidate_vertex_cap
    edge_cap = settings.decomposition.exhaustive_edge_cap
    candidates = GraphFamily()
    for member in family:
        if member.n > vertex_cap:
            raise LabError(
                f"forbidden graph on {member.n} vertices exceeds candidate cap {vertex_cap}",
                code="candidate_cap_exceeded",
                phase="decomposition",
                details={"n": member.n, "cap": vertex_cap},
            )
        for candidate in _subset_candidates(member, p):
            candidates.add(candidate)
        if query.exhaustive:
            if member.num_edges > edge_cap:
                raise LabError(
                    f"exhaustive sweep refused for {member.num_edges} edges (cap {edge_cap})",
                    code="candidate_cap_exceeded",
                    phase="decomposition",
                    details={"edges": member.num_edges, "cap": edge_cap},
                )
            for candidate in _edge_subset_candidates(member):
                candidates.add(candidate)

    # A candidate containing an accepted smaller member is not minimal.
    result = DecompositionResult(family=GraphFamily(), p=p, candidates=len(candidates))
    by_size: dict[int, list[Graph]] = {}
    for candidate in candidates:
        by_size.setdefault(candidate.num_edges, []).append(candidate)

    for size in sorted(by_size):
        accepted = result.family.members()
        pending = [
            candidate
            for candidate in by_size[size]
            if not any(contains(candidate, smaller) is not None for smaller in accepted)
        ]
        jobs = [(candidate, family, p) for candidate in pending]
        for candidate, verdict in fan_out(_check_candidate, jobs, query.workers):
            if verdict is None:
                result.authoritative = False
                result.undecided.append(candidate)
            elif verdict:
                result.family.add(candidate)

    log.info(
        "decomposition_family_computed",
        p=p,
        forbidden=len(family),
        candidates=result.candidates,
        members=len(result.family),
        authoritative=result.authoritative,
    )
    return result


# ============================================================================
# Blow-up fast path
# ============================================================================


def decomposition_family_blowup(h: Graph, p: int) -> GraphFamily:
    """Split family of ``h``, valid as the decomposition family of its (p+1)-blow-up.

    Licensed only for ``p >= 3`` and ``chi(h) <= p - 1``.
    """
    if p < 3:
        raise HypothesisViolation(
            f"blow-up fast path needs p >= 3, got {p}", details={"p": p, "reason": "p_too_small"}
        )
    chi = chromatic_number(h)
    if chi > p - 1:
        raise HypothesisViolation(
            f"blow-up fast path needs chi(h) <= p - 1, got chi={chi}, p={p}",
            details={"p": p, "chromatic_number": chi, "reason": "chromatic_too_large"},
        )
    return split_family(h.strip_isolated())


@dataclass
class BlowupCrossCheck:
    general: GraphFamily
    fast: GraphFamily | None
    fast_error: str | None = None
    authoritative: bool = True

    @property
    def agree(self) -> bool:
        return self.fast is not None and self.general == self.fast

    @property
    def only_general(self) -> list[str]:
        fast = set(self.fast.key()) if self.fast is not None else set()
        return [form for form in self.general.canonical_strings() if form not in fast]

    @property
    def only_fast(self) -> list[str]:
        if self.fast is None:
            return []
        general = set(self.general.key())
        return [form for form in self.fast.canonical_strings() if form not in general]


def cross_check_blowup(h: Graph, p: int, workers: int = 1) -> BlowupCrossCheck:
    """Compare the definition-based family of ``h``'s (p+1)-blow-up with the fast path."""
    general = decomposition_family_general(
        DecompositionQuery(forbidden=GraphFamily([blow_up(h, p + 1)]), p=p, workers=workers)
    )
    try:
        fast: GraphFamily | None = decomposition_family_blowup(h, p)
        fast_error = None
    except HypothesisViolation as exc:
        fast, fast_error = None, exc.message
    return BlowupCrossCheck(
        general=general.family,
        fast=fast,
        fast_error=fast_error,
        authoritative=general.authoritative,
    )


__all__ = [
    "BlowupCrossCheck",
    "DecompositionQuery",
    "DecompositionResult",
    "cross_check_blowup",
    "decomposition_family_blowup",
    "decomposition_family_general",
    "family_threshold",
    "is_decomposition_member",
]
