"""Product hosts ``(M ∪ I_t) ⊗ K_{p-1}(t, ..., t)``."""

from __future__ import annotations

from dataclasses import dataclass

from turanlab.constructions.builders import Construction
from turanlab.containment.search import ContainmentWitness, contains
from turanlab.errors import ConstructionError
from turanlab.graph.core import Graph
from turanlab.graph.named import complete_multipartite, empty
from turanlab.graph.operations import disjoint_union, join


@dataclass(frozen=True)
class ProductHostSpec:
    """``m`` plus ``t`` isolated vertices, joined to ``p - 1`` independent classes of size ``t``."""

    m_part: Graph
    p: int
    t: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ConstructionError(f"product host needs p >= 2, got {self.p}", details={"p": self.p})
        if self.t < 1:
            raise ConstructionError(f"product host needs t >= 1, got {self.t}", details={"t": self.t})

    @property
    def order(self) -> int:
        return self.m_part.n + self.t * self.p

    def build(self) -> Construction:
        """Labels: M first, then I_t, then the Turán classes in order.

        Symmetry groups: isolated vertices of M together with I_t, each
        Turán class, and the twin classes of M.
        """
        m, t = self.m_part, self.t
        host = join(disjoint_union(m, empty(t)), complete_multipartite([t] * (self.p - 1)))

        groups: list[tuple[int, ...]] = []
        loose = tuple(m.isolated_vertices()) + tuple(range(m.n, m.n + t))
        if len(loose) > 1:
            groups.append(loose)
        groups.extend(group for group in m.twin_classes() if m.rows[group[0]])
        start = m.n + t
        for _ in range(self.p - 1):
            if t > 1:
                groups.append(tuple(range(start, start + t)))
            start += t
        return Construction(graph=host, symmetry=tuple(groups), label=f"product(p={self.p},t={t})")


def product_host(m: Graph, p: int, t: int) -> Construction:
    return ProductHostSpec(m, p, t).build()


def contains_in_product(
    m: Graph,
    p: int,
    t: int,
    pattern: Graph,
    *,
    use_symmetry: bool = True,
    max_nodes: int | None = None,
) -> ContainmentWitness | None:
    """Does ``pattern`` embed in ``(m ∪ I_t) ⊗ K_{p-1}(t, ..., t)``?"""
    host = product_host(m, p, t)
    return contains(
        host.graph,
        pattern,
        symmetry=host.symmetry if use_symmetry else (),
        max_nodes=max_nodes,
    )


__all__ = ["ProductHostSpec", "contains_in_product", "product_host"]
