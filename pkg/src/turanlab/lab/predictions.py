"""Predicted extremal numbers for blow-ups of stars, paths, cycles and trees.

Every prediction is an asymptotic statement: it holds once ``n`` passes a
threshold. Where that threshold is explicit it is reported next to the
value; a prediction below its threshold is annotated, never refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from turanlab.constructions.builders import h_edge_count, h_star_edge_count, turan_edge_count
from turanlab.errors import HypothesisViolation, LabError
from turanlab.graph.core import Graph
from turanlab.lab.trees import TreeVerdict, classify_tree


class BlowupKind(str, Enum):
    """Which forbidden blow-up a prediction is about."""

    STAR = "star"
    PATH = "path"
    CYCLE = "cycle"
    TREE = "tree"


@dataclass(frozen=True)
class Prediction:
    kind: BlowupKind
    n: int
    p: int
    value: int
    construction: str
    threshold: int | None = None

    @property
    def threshold_met(self) -> bool | None:
        """``None`` when the threshold is not quantified."""
        if self.threshold is None:
            return None
        return self.n >= self.threshold

    def annotation(self) -> str:
        met = self.threshold_met
        if met is None:
            return f"{self.kind.value}: threshold for large n is not quantified; value is predictive only"
        if met:
            return f"{self.kind.value}: n={self.n} meets threshold {self.threshold}"
        return f"{self.kind.value}: threshold not met at this n (n={self.n} < {self.threshold})"


def star_constant(k: int) -> int:
    """Additive constant over ex(n, K_{p+1}) for the (p+1)-blow-up of S_k."""
    if k < 1:
        raise LabError(f"star blow-ups need k >= 1, got {k}", code="parameters_invalid", details={"k": k})
    return k * k - k if k % 2 else k * k - 3 * k // 2


def _require(condition: bool, message: str, **details: int) -> None:
    if not condition:
        raise LabError(message, code="parameters_invalid", phase="lab", details=details)


def _h_or_h_prime(n: int, p: int, s: int, with_extra_edge: bool) -> tuple[int, str]:
    value = h_edge_count(n, p, s)
    if with_extra_edge:
        return value + 1, f"hprime:{n},{p},{s}"
    return value, f"h:{n},{p},{s}"


def predict_star(k: int, p: int, n: int) -> Prediction:
    _require(p >= 2 and n >= p, f"star prediction needs p >= 2 and n >= p, got p={p}, n={n}", p=p, n=n)
    return Prediction(
        kind=BlowupKind.STAR,
        n=n,
        p=p,
        value=turan_edge_count(n, p) + star_constant(k),
        construction=f"turan:{n},{p}",
        threshold=16 * k**3 * (p + 1) ** 8,
    )


def predict_path(k: int, p: int, n: int) -> Prediction:
    """Blow-up of the path with ``k`` edges."""
    _require(k >= 1 and p >= 2, f"path prediction needs k >= 1 and p >= 2, got k={k}, p={p}", k=k, p=p)
    s = (k - 1) // 2 + 1
    value, construction = _h_or_h_prime(n, p, s, with_extra_edge=k % 2 == 0)
    return Prediction(
        kind=BlowupKind.PATH,
        n=n,
        p=p,
        value=value,
        construction=construction,
        threshold=16 * k**11 * (p + 1) ** 8 + 1,
    )


def predict_cycle(k: int, p: int, n: int) -> Prediction:
    _require(k >= 3 and p >= 2, f"cycle prediction needs k >= 3 and p >= 2, got k={k}, p={p}", k=k, p=p)
    if k == 3 and p == 2:
        return Prediction(
            kind=BlowupKind.CYCLE,
            n=n,
            p=p,
            value=max(h_star_edge_count(n), h_edge_count(n, 2, 2)),
            construction=f"hstar:{n}",
        )
    s = (k - 1) // 2 + 1
    value, construction = _h_or_h_prime(n, p, s, with_extra_edge=k % 2 == 0)
    return Prediction(kind=BlowupKind.CYCLE, n=n, p=p, value=value, construction=construction)


def predict_tree(tree: Graph, p: int, n: int) -> Prediction:
    if p < 3:
        raise HypothesisViolation(f"tree prediction needs p >= 3, got {p}", details={"p": p})
    classification = classify_tree(tree)
    if classification.verdict is TreeVerdict.NEITHER:
        raise HypothesisViolation(
            "tree satisfies neither colour-class condition; no prediction",
            code="tree_unclassified",
            details={"a": classification.a, "b": classification.b},
        )
    value, construction = _h_or_h_prime(
        n, p, classification.a, with_extra_edge=classification.verdict is TreeVerdict.CASE_II
    )
    return Prediction(kind=BlowupKind.TREE, n=n, p=p, value=value, construction=construction)


def predicted_value(kind: BlowupKind | str, n: int, p: int, *, k: int | None = None, tree: Graph | None = None) -> Prediction:
    """Dispatch on ``kind``; ``k`` is the star, path (edge count) or cycle length."""
    kind = BlowupKind(kind)
    if kind is BlowupKind.TREE:
        if tree is None:
            raise LabError("tree prediction needs a tree", code="parameters_invalid", phase="lab")
        return predict_tree(tree, p, n)
    if k is None:
        raise LabError(f"{kind.value} prediction needs k", code="parameters_invalid", phase="lab")
    if kind is BlowupKind.STAR:
        return predict_star(k, p, n)
    if kind is BlowupKind.PATH:
        return predict_path(k, p, n)
    return predict_cycle(k, p, n)


__all__ = [
    "BlowupKind",
    "Prediction",
    "predict_cycle",
    "predict_path",
    "predict_star",
    "predict_tree",
    "predicted_value",
    "star_constant",
]
