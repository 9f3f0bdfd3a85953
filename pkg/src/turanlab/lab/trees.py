"""Colour-class classification of trees for the tree blow-up prediction.

With colour classes ``A`` (smaller) and ``B``:

* case I: ``A`` contains a leaf and the independence number equals ``|B|``;
  the predicted extremal graph is ``H(n, p, |A|)``.
* case II: every vertex of ``A`` has degree at least 2 and some has exactly
  2; the predicted extremal graph is ``H'(n, p, |A|)``.

When ``|A| == |B|`` either class may play ``A``; both orientations are
evaluated and the stronger verdict is kept.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

import networkx as nx

from turanlab.constructions.spec import ConstructionSpec, SpecKind
from turanlab.errors import HypothesisViolation
from turanlab.graph.core import Graph
from turanlab.graph.invariants import independence_number, is_tree


class TreeVerdict(str, Enum):
    CASE_I = "case_i"
    CASE_II = "case_ii"
    NEITHER = "neither"


@dataclass(frozen=True)
class TreeClassification:
    tree: Graph
    a_class: tuple[int, ...]
    b_class: tuple[int, ...]
    leaf_in_a: bool
    alpha_equals_b: bool
    min_degree_a_is_two: bool
    verdict: TreeVerdict
    overlap: bool = False

    @property
    def a(self) -> int:
        return len(self.a_class)

    @property
    def b(self) -> int:
        return len(self.b_class)

    def predicted(self, n: int, p: int) -> ConstructionSpec | None:
        """Spec of the predicted extremal graph for the (p+1)-blow-up, if any."""
        if self.verdict is TreeVerdict.CASE_I:
            return ConstructionSpec(SpecKind.H, params=(n, p, self.a))
        if self.verdict is TreeVerdict.CASE_II:
            return ConstructionSpec(SpecKind.HPRIME, params=(n, p, self.a))
        return None


def _colour_classes(t: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if t.n == 1:
        return (), (0,)
    colouring = nx.bipartite.color(t.to_networkx())
    first = tuple(v for v in range(t.n) if colouring[v] == colouring[0])
    second = tuple(v for v in range(t.n) if colouring[v] != colouring[0])
    return (first, second) if len(first) <= len(second) else (second, first)


def _evaluate(t: Graph, a_class: tuple[int, ...], b_class: tuple[int, ...], alpha: int) -> TreeClassification:
    degrees = [t.degree(v) for v in a_class]
    leaf_in_a = any(d == 1 for d in degrees)
    alpha_equals_b = alpha == len(b_class)
    min_degree_two = bool(degrees) and min(degrees) == 2
    if leaf_in_a and alpha_equals_b:
        verdict = TreeVerdict.CASE_I
    elif min_degree_two:
        verdict = TreeVerdict.CASE_II
    else:
        verdict = TreeVerdict.NEITHER
    return TreeClassification(
        tree=t,
        a_class=a_class,
        b_class=b_class,
        leaf_in_a=leaf_in_a,
        alpha_equals_b=alpha_equals_b,
        min_degree_a_is_two=min_degree_two,
        verdict=verdict,
        overlap=leaf_in_a and alpha_equals_b and min_degree_two,
    )


_RANK = {TreeVerdict.CASE_I: 0, TreeVerdict.CASE_II: 1, TreeVerdict.NEITHER: 2}


def classify_tree(t: Graph) -> TreeClassification:
    """Classify ``t``; case I wins whenever both cases hold."""
    if not is_tree(t):
        raise HypothesisViolation(
            f"graph on {t.n} vertices with {t.num_edges} edges is not a tree",
            code="not_a_tree",
            details={"n": t.n, "edges": t.num_edges},
        )
    a_class, b_class = _colour_classes(t)
    alpha = independence_number(t)
    options = [_evaluate(t, a_class, b_class, alpha)]
    if len(a_class) == len(b_class):
        options.append(_evaluate(t, b_class, a_class, alpha))

    best = min(options, key=lambda option: _RANK[option.verdict])
    if len(options) == 2 and {o.verdict for o in options} == {TreeVerdict.CASE_I, TreeVerdict.CASE_II}:
        best = replace(best, overlap=True)
    return best


__all__ = ["TreeClassification", "TreeVerdict", "classify_tree"]
