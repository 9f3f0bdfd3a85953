"""Named extremal constructions.

Every builder returns a :class:`Construction`: the graph plus the groups of
vertices it knows to be interchangeable (pairwise twins). The containment
search uses those groups to avoid trying symmetric host vertices twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from turanlab.errors import ConstructionError
from turanlab.graph.core import Graph
from turanlab.graph.named import complete, complete_multipartite, empty
from turanlab.graph.operations import join


Symmetry = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Construction:
    graph: Graph
    symmetry: Symmetry = ()
    label: str = ""

    def shifted_symmetry(self, offset: int) -> Symmetry:
        return tuple(tuple(v + offset for v in group) for group in self.symmetry)


def _groups(*groups: range | list[int] | tuple[int, ...]) -> Symmetry:
    return tuple(tuple(group) for group in groups if len(group) > 1)


def _require(condition: bool, message: str, **details: int) -> None:
    if not condition:
        raise ConstructionError(message, details=dict(details))


# ============================================================================
# Turán graphs
# ============================================================================


def turan_classes(n: int, p: int) -> list[int]:
    """Class sizes of T(n, p), largest first."""
    _require(1 <= p <= n, f"turan needs 1 <= p <= n, got n={n}, p={p}", n=n, p=p)
    base, extra = divmod(n, p)
    return [base + 1] * extra + [base] * (p - extra)


def turan_edge_count(n: int, p: int) -> int:
    sizes = turan_classes(n, p)
    return (n * n - sum(size * size for size in sizes)) // 2


def _class_blocks(sizes: list[int], offset: int) -> list[range]:
    blocks = []
    start = offset
    for size in sizes:
        blocks.append(range(start, start + size))
        start += size
    return blocks


def turan_construction(n: int, p: int) -> Construction:
    sizes = turan_classes(n, p)
    return Construction(
        graph=complete_multipartite(sizes),
        symmetry=_groups(*_class_blocks(sizes, 0)),
        label=f"T({n},{p})",
    )


def turan(n: int, p: int) -> Graph:
    return turan_construction(n, p).graph


# ============================================================================
# H(n,p,s), H'(n,p,s), H*(n), Q(r,p)
# ============================================================================


def _check_h_params(n: int, p: int, s: int) -> None:
    _require(s >= 1, f"s must be >= 1, got {s}", s=s)
    _require(p >= 1, f"p must be >= 1, got {p}", p=p)
    _require(n - s + 1 >= p, f"H({n},{p},{s}) needs n - s + 1 >= p", n=n, p=p, s=s)


def h_edge_count(n: int, p: int, s: int) -> int:
    _check_h_params(n, p, s)
    rest = n - s + 1
    return comb(s - 1, 2) + (s - 1) * rest + turan_edge_count(rest, p)


def h_construction(n: int, p: int, s: int) -> Construction:
    """K_{s-1} joined to T(n-s+1, p); the clique takes labels 0..s-2."""
    _check_h_params(n, p, s)
    sizes = turan_classes(n - s + 1, p)
    graph = join(complete(s - 1), complete_multipartite(sizes))
    return Construction(
        graph=graph,
        symmetry=_groups(range(s - 1), *_class_blocks(sizes, s - 1)),
        label=f"H({n},{p},{s})",
    )


def h_graph(n: int, p: int, s: int) -> Graph:
    return h_construction(n, p, s).graph


def h_prime_construction(
    n: int,
    p: int,
    s: int,
    class_index: int = 0,
    edge_choice: tuple[int, int] | None = None,
) -> Construction:
    """H(n,p,s) plus one edge inside Turán class ``class_index``.

    ``edge_choice`` defaults to the two lowest labels of the class.
    """
    base = h_construction(n, p, s)
    sizes = turan_classes(n - s + 1, p)
    _require(
        0 <= class_index < len(sizes),
        f"class index {class_index} outside 0..{len(sizes) - 1}",
        class_index=class_index,
    )
    blocks = _class_blocks(sizes, s - 1)
    block = blocks[class_index]
    _require(
        len(block) >= 2,
        f"class {class_index} has {len(block)} vertex; no room for an extra edge",
        class_index=class_index,
        size=len(block),
    )
    u, v = edge_choice if edge_choice is not None else (block[0], block[1])
    _require(
        u != v and u in block and v in block,
        f"edge ({u}, {v}) does not lie inside class {class_index}",
        u=u,
        v=v,
    )
    rest = [w for w in block if w not in (u, v)]
    others = [b for index, b in enumerate(blocks) if index != class_index]
    return Construction(
        graph=base.graph.add_edge(u, v),
        symmetry=_groups(range(s - 1), (min(u, v), max(u, v)), rest, *others),
        label=f"H'({n},{p},{s})",
    )


def h_prime(
    n: int,
    p: int,
    s: int,
    class_index: int = 0,
    edge_choice: tuple[int, int] | None = None,
) -> Graph:
    return h_prime_construction(n, p, s, class_index, edge_choice).graph


def h_star_edge_count(n: int) -> int:
    big, small = (n + 1) // 2, n // 2
    return big * small + big // 2 + small // 2


def h_star_construction(n: int) -> Construction:
    """Balanced complete bipartite graph with a near-perfect matching in each side.

    Side A is ``0..ceil(n/2)-1``, side B the rest. Within a side, local
    indices ``2i`` and ``2i+1`` are matched; an odd side leaves its last
    vertex unmatched.
    """
    _require(n >= 2, f"H*(n) needs n >= 2, got {n}", n=n)
    big = (n + 1) // 2
    sizes = [big, n - big]
    graph = complete_multipartite(sizes)
    pairs: list[tuple[int, int]] = []
    for start, size in ((0, big), (big, n - big)):
        pairs.extend((start + 2 * i, start + 2 * i + 1) for i in range(size // 2))
    for u, v in pairs:
        graph = graph.add_edge(u, v)
    return Construction(graph=graph, symmetry=_groups(*pairs), label=f"H*({n})")


def h_star(n: int) -> Graph:
    return h_star_construction(n).graph


def q_construction(r: int, p: int) -> Construction:
    """Q(r, p): one vertex (label 0) joined to T(rp, p)."""
    _require(r >= 1 and p >= 1, f"Q(r,p) needs r, p >= 1, got r={r}, p={p}", r=r, p=p)
    sizes = turan_classes(r * p, p)
    return Construction(
        graph=join(empty(1), complete_multipartite(sizes)),
        symmetry=_groups(*_class_blocks(sizes, 1)),
        label=f"Q({r},{p})",
    )


def q_graph(r: int, p: int) -> Graph:
    return q_construction(r, p).graph


__all__ = [
    "Construction",
    "Symmetry",
    "h_construction",
    "h_edge_count",
    "h_graph",
    "h_prime",
    "h_prime_construction",
    "h_star",
    "h_star_construction",
    "h_star_edge_count",
    "q_construction",
    "q_graph",
    "turan",
    "turan_classes",
    "turan_construction",
    "turan_edge_count",
]
