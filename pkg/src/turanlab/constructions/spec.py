"""Textual construction specs.

Grammar (``kind:args``)::

    turan:n,p          h:n,p,s          hprime:n,p,s[,class[,u,v]]
    hstar:n            q:r,p            blowup:<spec|g6>,q
    path:k  cycle:k  star:k  complete:n  empty:n  matching:k
    multipartite:a,b,...                 subdivided_star:r
    union:<spec>+<spec>+...              join:<spec>*<spec>*...
    copies:k,<spec>                      g6:<graph6>

A bare graph6 string is accepted wherever a spec is. Parentheses group
nested specs, e.g. ``join:(union:path:3+empty:2)*empty:2``. graph6 never
uses ``: , + * ( )`` so the grammar is unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from turanlab.constructions.builders import (
    Construction,
    h_construction,
    h_prime_construction,
    h_star_construction,
    q_construction,
    turan_construction,
)
from turanlab.constructions.transforms import blow_up_construction
from turanlab.errors import ConstructionError, LabError, SpecParseError
from turanlab.graph.core import Graph
from turanlab.graph.graph6 import graph6_decode, graph6_encode
from turanlab.graph.named import (
    complete,
    complete_multipartite,
    cycle,
    empty,
    matching,
    path,
    star,
    subdivided_star,
)
from turanlab.graph.operations import disjoint_union, join, k_copies


class SpecKind(str, Enum):
    TURAN = "turan"
    H = "h"
    HPRIME = "hprime"
    HSTAR = "hstar"
    Q = "q"
    BLOWUP = "blowup"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    EMPTY = "empty"
    MATCHING = "matching"
    MULTIPARTITE = "multipartite"
    SUBDIVIDED_STAR = "subdivided_star"
    UNION = "union"
    JOIN = "join"
    COPIES = "copies"
    RAW = "g6"


_ARITY: dict[SpecKind, tuple[int, int]] = {
    SpecKind.TURAN: (2, 2),
    SpecKind.H: (3, 3),
    SpecKind.HPRIME: (3, 6),
    SpecKind.HSTAR: (1, 1),
    SpecKind.Q: (2, 2),
    SpecKind.PATH: (1, 1),
    SpecKind.CYCLE: (1, 1),
    SpecKind.STAR: (1, 1),
    SpecKind.COMPLETE: (1, 1),
    SpecKind.EMPTY: (1, 1),
    SpecKind.MATCHING: (1, 1),
    SpecKind.MULTIPARTITE: (1, 1024),
    SpecKind.SUBDIVIDED_STAR: (1, 1),
}


@dataclass(frozen=True)
class ConstructionSpec:
    """Symbolic description of a construction."""

    kind: SpecKind
    params: tuple[int, ...] = ()
    parts: tuple[ConstructionSpec, ...] = ()
    graph6: str | None = None

    def __str__(self) -> str:
        if self.kind is SpecKind.RAW:
            return f"g6:{self.graph6}"
        if self.kind is SpecKind.UNION:
            return "union:" + "+".join(_wrap(part) for part in self.parts)
        if self.kind is SpecKind.JOIN:
            return "join:" + "*".join(_wrap(part) for part in self.parts)
        if self.kind is SpecKind.COPIES:
            return f"copies:{self.params[0]},{_wrap(self.parts[0])}"
        if self.kind is SpecKind.BLOWUP:
            return f"blowup:{_wrap(self.parts[0])},{self.params[0]}"
        return f"{self.kind.value}:" + ",".join(str(x) for x in self.params)

    @classmethod
    def raw(cls, g: Graph) -> ConstructionSpec:
        return cls(SpecKind.RAW, graph6=graph6_encode(g))


def _wrap(spec: ConstructionSpec) -> str:
    text = str(spec)
    return f"({text})" if spec.kind in (SpecKind.UNION, SpecKind.JOIN) else text


# ============================================================================
# Parsing
# ============================================================================


def _split_top(text: str, separator: str) -> list[str]:
    """Split on ``separator`` outside parentheses."""
    pieces: list[str] = []
    depth = 0
    current: list[str] = []
    for char in text:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise SpecParseError(f"unbalanced ')' in {text!r}")
        if char == separator and depth == 0:
            pieces.append("".join(current))
            current = []
        else:
            current.append(char)
    if depth:
        raise SpecParseError(f"unbalanced '(' in {text!r}")
    pieces.append("".join(current))
    return pieces


def _closing_index(text: str) -> int:
    depth = 0
    for index, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth == 0:
                return index
    return -1


def _unwrap(text: str) -> str:
    """Strip parentheses that enclose the whole text."""
    text = text.strip()
    while text.startswith("(") and _closing_index(text) == len(text) - 1:
        text = text[1:-1].strip()
    return text


def _ints(text: str, kind: SpecKind) -> tuple[int, ...]:
    try:
        values = tuple(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise SpecParseError(
            f"{kind.value} expects integer arguments, got {text!r}", details={"kind": kind.value}
        ) from exc
    low, high = _ARITY[kind]
    if not low <= len(values) <= high:
        raise SpecParseError(
            f"{kind.value} takes {low}..{high} arguments, got {len(values)}",
            details={"kind": kind.value},
        )
    return values


def parse_spec(text: str) -> ConstructionSpec:
    """Parse the textual grammar into a :class:`ConstructionSpec`."""
    text = _unwrap(text)
    if not text:
        raise SpecParseError("empty construction spec")
    if ":" not in text:
        return ConstructionSpec(SpecKind.RAW, graph6=text)

    head, _, body = text.partition(":")
    try:
        kind = SpecKind(head.strip().lower())
    except ValueError as exc:
        raise SpecParseError(f"unknown construction kind {head!r}", details={"kind": head}) from exc

    if kind is SpecKind.RAW:
        return ConstructionSpec(kind, graph6=body.strip())
    if kind is SpecKind.UNION:
        return ConstructionSpec(kind, parts=tuple(parse_spec(p) for p in _split_top(body, "+")))
    if kind is SpecKind.JOIN:
        return ConstructionSpec(kind, parts=tuple(parse_spec(p) for p in _split_top(body, "*")))
    if kind is SpecKind.COPIES:
        pieces = _split_top(body, ",")
        if len(pieces) < 2:
            raise SpecParseError("copies expects 'copies:k,<spec>'")
        try:
            count = int(pieces[0])
        except ValueError as exc:
            raise SpecParseError(f"copy count {pieces[0]!r} is not an integer") from exc
        return ConstructionSpec(kind, params=(count,), parts=(parse_spec(",".join(pieces[1:])),))
    if kind is SpecKind.BLOWUP:
        pieces = _split_top(body, ",")
        if len(pieces) < 2:
            raise SpecParseError("blowup expects 'blowup:<spec>,q'")
        try:
            q = int(pieces[-1])
        except ValueError as exc:
            raise SpecParseError(f"clique size {pieces[-1]!r} is not an integer") from exc
        return ConstructionSpec(kind, params=(q,), parts=(parse_spec(",".join(pieces[:-1])),))

    return ConstructionSpec(kind, params=_ints(body, kind))


def parse_spec_list(text: str) -> list[ConstructionSpec]:
    """Parse ``;``-separated specs (commas belong to the specs themselves)."""
    return [parse_spec(piece) for piece in _split_top(text, ";") if piece.strip()]


# ============================================================================
# Building
# ============================================================================


def _named(graph: Graph, label: str) -> Construction:
    return Construction(graph=graph, symmetry=tuple(graph.twin_classes()), label=label)


def build(spec: ConstructionSpec) -> Construction:
    """Realize a spec; parameter violations raise ``ConstructionError``."""
    args = spec.params
    try:
        match spec.kind:
            case SpecKind.TURAN:
                return turan_construction(*args)
            case SpecKind.H:
                return h_construction(*args)
            case SpecKind.HPRIME:
                n, p, s = args[:3]
                class_index = args[3] if len(args) > 3 else 0
                if len(args) == 5:
                    raise SpecParseError("hprime edge choice needs both endpoints")
                edge = (args[4], args[5]) if len(args) == 6 else None
                return h_prime_construction(n, p, s, class_index, edge)
            case SpecKind.HSTAR:
                return h_star_construction(*args)
            case SpecKind.Q:
                return q_construction(*args)
            case SpecKind.BLOWUP:
                return blow_up_construction(build(spec.parts[0]).graph, args[0])
            case SpecKind.PATH:
                return _named(path(*args), str(spec))
            case SpecKind.CYCLE:
                return _named(cycle(*args), str(spec))
            case SpecKind.STAR:
                return _named(star(*args), str(spec))
            case SpecKind.COMPLETE:
                return _named(complete(*args), str(spec))
            case SpecKind.EMPTY:
                return _named(empty(*args), str(spec))
            case SpecKind.MATCHING:
                return _named(matching(*args), str(spec))
            case SpecKind.MULTIPARTITE:
                return _named(complete_multipartite(args), str(spec))
            case SpecKind.SUBDIVIDED_STAR:
                return _named(subdivided_star(*args), str(spec))
            case SpecKind.RAW:
                return _named(graph6_decode(spec.graph6 or ""), str(spec))
            case SpecKind.COPIES:
                part = build(spec.parts[0])
                graph = k_copies(part.graph, args[0])
                groups = tuple(
                    group
                    for copy in range(args[0])
                    for group in part.shifted_symmetry(copy * part.graph.n)
                )
                return Construction(graph=graph, symmetry=groups, label=str(spec))
            case SpecKind.UNION | SpecKind.JOIN:
                combine = disjoint_union if spec.kind is SpecKind.UNION else join
                graph = Graph.empty(0)
                groups_acc: list[tuple[int, ...]] = []
                for part_spec in spec.parts:
                    part = build(part_spec)
                    groups_acc.extend(part.shifted_symmetry(graph.n))
                    graph = combine(graph, part.graph)
                return Construction(graph=graph, symmetry=tuple(groups_acc), label=str(spec))
    except LabError:
        raise
    except ValueError as exc:
        raise ConstructionError(str(exc), details={"spec": str(spec)}) from exc
    raise SpecParseError(f"unsupported construction kind {spec.kind}")


def build_graph(text: str) -> Graph:
    """Parse and realize a textual spec."""
    return build(parse_spec(text)).graph


__all__ = [
    "ConstructionSpec",
    "SpecKind",
    "build",
    "build_graph",
    "parse_spec",
    "parse_spec_list",
]
