"""Exact invariants against networkx references."""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import settings as hsettings

from tests.strategies import graphs
from turanlab.config.settings import settings
from turanlab.errors import InvariantCapExceeded
from turanlab.graph.core import Graph
from turanlab.graph.invariants import (
    chromatic_number,
    independence_number,
    invariants,
    is_colorable,
    is_linear_forest,
    is_tree,
    matching_number,
)
from turanlab.graph.named import complete, complete_multipartite, cycle, empty, matching, path, star
from turanlab.graph.operations import disjoint_union


pytestmark = pytest.mark.unit


def _brute_chromatic(g: Graph) -> int:
    for k in range(g.n + 1):
        if is_colorable(g.rows, g.vertex_mask, k):
            return k
    return g.n


@pytest.mark.parametrize(
    ("g", "chi"),
    [
        (empty(0), 0),
        (empty(3), 1),
        (path(4), 2),
        (cycle(5), 3),
        (cycle(6), 2),
        (complete(5), 5),
        (complete_multipartite([2, 3, 1]), 3),
    ],
)
def test_chromatic_number_known(g: Graph, chi: int) -> None:
    assert chromatic_number(g) == chi


def test_petersen_invariants() -> None:
    petersen = Graph.from_networkx(nx.petersen_graph())
    assert chromatic_number(petersen) == 3
    assert independence_number(petersen) == 4
    assert matching_number(petersen) == 5


@pytest.mark.property
@given(graphs(max_n=8))
@hsettings(max_examples=60, deadline=None)
def test_independence_number_matches_networkx(g: Graph) -> None:
    complement = nx.complement(g.to_networkx())
    reference = max((len(c) for c in nx.find_cliques(complement)), default=0)
    assert independence_number(g) == reference


@pytest.mark.property
@given(graphs(max_n=7))
@hsettings(max_examples=60, deadline=None)
def test_chromatic_number_matches_exhaustive_colouring(g: Graph) -> None:
    assert chromatic_number(g) == _brute_chromatic(g)


def test_structure_predicates() -> None:
    assert is_tree(star(3))
    assert not is_tree(disjoint_union(path(2), path(2)))
    assert not is_tree(empty(0))
    assert is_linear_forest(matching(3))
    assert is_linear_forest(disjoint_union(path(4), empty(2)))
    assert not is_linear_forest(star(3))
    assert not is_linear_forest(cycle(4))


def test_invariant_cap_is_enforced(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings.graph, "invariant_cap", 5)
    with pytest.raises(InvariantCapExceeded) as exc_info:
        chromatic_number(path(6))
    assert exc_info.value.details == {"invariant": "chromatic_number", "n": 6, "cap": 5}
    assert chromatic_number(path(5)) == 2


def test_invariants_record_lists_capped_fields(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings.graph, "invariant_cap", 3)
    record = invariants(cycle(4))
    assert record.chromatic_number is None
    assert record.independence_number is None
    assert record.capped == ("chromatic_number", "independence_number")
    assert record.matching_number == 2
    assert record.is_connected
    assert not record.is_tree


def test_invariants_record_uncapped() -> None:
    record = invariants(path(5))
    assert (record.chromatic_number, record.independence_number) == (2, 3)
    assert record.degree_sequence == (2, 2, 2, 1, 1)
    assert record.is_tree and record.is_linear_forest
    assert record.capped == ()
