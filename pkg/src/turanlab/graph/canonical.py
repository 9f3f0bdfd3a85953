"""Canonical labelling by partition refinement and individualisation.

The search walks the individualise-refine tree, keeps the smallest relabelled
adjacency as the canonical leaf, and prunes children that lie in one orbit of
the automorphisms discovered so far (seeded with twin transpositions, which
covers the large symmetric groups of Turán-like graphs without search).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NewType

from turanlab.graph.core import Graph, iter_bits, mask_of
from turanlab.graph.graph6 import graph6_encode


CanonicalForm = NewType("CanonicalForm", str)
CanonicalKey = tuple[tuple[int, ...], tuple[int, ...]]

Cells = list[list[int]]


# ============================================================================
# Refinement
# ============================================================================


def _refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until equitable."""
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            by_signature: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = rows[v]
                signature = tuple((row & m).bit_count() for m in masks)
                by_signature.setdefault(signature, []).append(v)
            if len(by_signature) == 1:
                refined.append(cell)
                continue
            split = True
            refined.extend(by_signature[s] for s in sorted(by_signature))
        cells = refined
        if not split:
            return cells


def _individualize(cells: Cells, index: int, v: int) -> Cells:
    cell = cells[index]
    return [*cells[:index], [v], [u for u in cell if u != v], *cells[index + 1 :]]


def _target_index(cells: Cells) -> int:
    """First smallest non-singleton cell."""
    best = -1
    for index, cell in enumerate(cells):
        if len(cell) > 1 and (best < 0 or len(cell) < len(cells[best])):
            best = index
    return best


def _leaf(rows: Sequence[int], cells: Cells) -> tuple[list[int], tuple[int, ...]]:
    position = [0] * len(rows)
    for pos, cell in enumerate(cells):
        position[cell[0]] = pos
    relabelled = [0] * len(rows)
    for v, row in enumerate(rows):
        new_row = 0
        for u in iter_bits(row):
            new_row |= 1 << position[u]
        relabelled[position[v]] = new_row
    return position, tuple(relabelled)


# ============================================================================
# Automorphism bookkeeping
# ============================================================================


def _twin_generators(rows: Sequence[int], cells: Cells) -> list[list[int]]:
    """Transpositions of twins lying in the same cell."""
    cell_of = {v: index for index, cell in enumerate(cells) for v in cell}
    groups: dict[tuple[str, int, int], list[int]] = {}
    for v, row in enumerate(rows):
        groups.setdefault(("open", cell_of[v], row), []).append(v)
        groups.setdefault(("closed", cell_of[v], row | 1 << v), []).append(v)

    generators = []
    identity = list(range(len(rows)))
    for members in groups.values():
        for a, b in zip(members, members[1:], strict=False):
            swap = identity.copy()
            swap[a], swap[b] = b, a
            generators.append(swap)
    return generators


def _orbit_roots(target: list[int], generators: list[list[int]], prefix: tuple[int, ...]) -> dict[int, int]:
    """Union-find roots of ``target`` under generators fixing ``prefix`` pointwise."""
    parent = {v: v for v in target}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for gen in generators:
        if any(gen[x] != x for x in prefix):
            continue
        for v in target:
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in target}


@dataclass
class _Frame:
    cells: Cells
    prefix: tuple[int, ...]
    target_index: int
    tried: list[int] = field(default_factory=list)
    cursor: int = 0

    def next_vertex(self, generators: list[list[int]]) -> int | None:
        target = self.cells[self.target_index]
        while self.cursor < len(target):
            v = target[self.cursor]
            self.cursor += 1
            if self.tried:
                roots = _orbit_roots(target, generators, self.prefix)
                if roots[v] in {roots[w] for w in self.tried}:
                    continue
            self.tried.append(v)
            return v
        return None


# ============================================================================
# Public API
# ============================================================================


@dataclass(frozen=True)
class _Outcome:
    position: list[int]
    key: tuple[int, ...]
    generators: list[list[int]]


def _search(rows: Sequence[int], initial: Cells) -> _Outcome:
    n = len(rows)
    if n == 0:
        return _Outcome([], (), [])

    generators = _twin_generators(rows, initial)
    first: tuple[list[int], tuple[int, ...]] | None = None
    best: tuple[list[int], tuple[int, ...]] | None = None
    stack: list[_Frame] = []

    def visit(cells: Cells, prefix: tuple[int, ...]) -> None:
        nonlocal first, best
        if len(cells) < n:
            stack.append(_Frame(cells, prefix, _target_index(cells)))
            return
        position, key = _leaf(rows, cells)
        if first is None or best is None:
            first = best = (position, key)
            return
        for ref_position, ref_key in (first, best):
            if key == ref_key:
                inverse = [0] * n
                for v, pos in enumerate(ref_position):
                    inverse[pos] = v
                generators.append([inverse[position[v]] for v in range(n)])
                return
        if key < best[1]:
            best = (position, key)

    visit(_refine(rows, initial), ())
    while stack:
        frame = stack[-1]
        v = frame.next_vertex(generators)
        if v is None:
            stack.pop()
            continue
        child = _individualize(frame.cells, frame.target_index, v)
        visit(_refine(rows, child), (*frame.prefix, v))

    assert best is not None
    return _Outcome(best[0], best[1], generators)


def _initial_cells(n: int, partition: Sequence[Sequence[int]] | None) -> Cells:
    if partition is None:
        return [list(range(n))] if n else []
    cells = [sorted(cell) for cell in partition if cell]
    if sorted(v for cell in cells for v in cell) != list(range(n)):
        raise ValueError("partition must cover every vertex exactly once")
    return cells


def canonical_labeling(g: Graph, partition: Sequence[Sequence[int]] | None = None) -> list[int]:
    """Return ``position[v]``, the canonical label of each vertex.

    With ``partition`` (an ordered vertex colouring) the labelling maps
    cell ``i`` onto a contiguous block ahead of cell ``i + 1``.
    """
    return _search(g.rows, _initial_cells(g.n, partition)).position


def rows_key(rows: Sequence[int], partition: Sequence[Sequence[int]] | None = None) -> CanonicalKey:
    """:func:`canonical_key` on raw adjacency rows, skipping Graph validation."""
    cells = _initial_cells(len(rows), partition)
    return tuple(len(cell) for cell in cells), _search(rows, cells).key


def canonical_key(g: Graph, partition: Sequence[Sequence[int]] | None = None) -> CanonicalKey:
    """Hashable isomorphism invariant (colour-preserving when ``partition`` is given).

    The second component is the canonically relabelled adjacency itself.
    """
    return rows_key(g.rows, partition)


def automorphism_generators(g: Graph) -> list[list[int]]:
    """Generators of the automorphism group, as vertex maps."""
    return _search(g.rows, _initial_cells(g.n, None)).generators


def rows_key_with_automorphisms(rows: Sequence[int]) -> tuple[CanonicalKey, list[list[int]]]:
    """:func:`rows_key` plus automorphism generators from the same search."""
    cells = _initial_cells(len(rows), None)
    outcome = _search(rows, cells)
    return (tuple(len(cell) for cell in cells), outcome.key), outcome.generators


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, _search(g.rows, _initial_cells(g.n, None)).key)


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> CanonicalForm:
    """graph6 string of the canonically relabelled graph."""
    return CanonicalForm(graph6_encode(canonical_graph(g)))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges or a.degree_sequence() != b.degree_sequence():
        return False
    return canonical_key(a) == canonical_key(b)


__all__ = [
    "CanonicalForm",
    "CanonicalKey",
    "are_isomorphic",
    "automorphism_generators",
    "canonical_form",
    "canonical_graph",
    "canonical_key",
    "canonical_labeling",
    "rows_key",
    "rows_key_with_automorphisms",
]
