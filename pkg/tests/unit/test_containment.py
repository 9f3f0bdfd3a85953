"""Subgraph containment against a networkx monomorphism oracle."""

import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from networkx.algorithms.isomorphism import GraphMatcher

from tests.strategies import graphs
from turanlab.constructions.builders import h_star_construction, turan, turan_construction
from turanlab.containment.cache import QueryCache, query_cache
from turanlab.containment.freeness import is_family_free
from turanlab.containment.product import ProductHostSpec, contains_in_product, product_host
from turanlab.containment.search import ContainmentWitness, contains, contains_through_edge, validate_witness
from turanlab.errors import BudgetExceeded, ConstructionError
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.graph.named import complete, cycle, empty, matching, path, star
from turanlab.graph.operations import disjoint_union


pytestmark = pytest.mark.unit


def _oracle(host: Graph, pattern: Graph) -> bool:
    return GraphMatcher(host.to_networkx(), pattern.to_networkx()).subgraph_is_monomorphic()


# ============================================================================
# Plain hosts
# ============================================================================


class TestContains:
    @pytest.mark.parametrize(
        ("host", "pattern", "expected"),
        [
            (cycle(5), complete(3), False),
            (cycle(5), path(5), True),
            (turan(6, 2), complete(3), False),
            (turan(6, 2), cycle(4), True),
            (turan(7, 3), complete(4), False),
            (complete(4), matching(2), True),
            (star(4), matching(2), False),
            (cycle(6), disjoint_union(path(3), empty(3)), True),
            (path(3), disjoint_union(path(2), empty(2)), False),
        ],
    )
    def test_known_answers(self, host: Graph, pattern: Graph, expected: bool) -> None:
        witness = contains(host, pattern)
        assert (witness is not None) is expected
        if witness is not None:
            assert validate_witness(host, pattern, witness)

    @pytest.mark.property
    @given(graphs(max_n=7), graphs(min_n=1, max_n=5))
    @hsettings(max_examples=150, deadline=None)
    def test_matches_monomorphism_oracle(self, host: Graph, pattern: Graph) -> None:
        witness = contains(host, pattern)
        assert (witness is not None) == _oracle(host, pattern)
        if witness is not None:
            assert validate_witness(host, pattern, witness)

    @pytest.mark.slow
    @pytest.mark.property
    @given(graphs(max_n=8), graphs(min_n=1, max_n=6))
    @hsettings(hsettings.get_profile("acceptance"), max_examples=1_000)
    def test_matches_monomorphism_oracle_on_a_large_corpus(self, host: Graph, pattern: Graph) -> None:
        assert (contains(host, pattern, use_cache=False) is not None) == _oracle(host, pattern)

    @pytest.mark.property
    @given(graphs(min_n=1, max_n=5))
    @hsettings(max_examples=80, deadline=None)
    def test_symmetry_hints_do_not_change_answers(self, pattern: Graph) -> None:
        for construction in (turan_construction(7, 3), h_star_construction(7)):
            hinted = contains(construction.graph, pattern, symmetry=construction.symmetry)
            plain = contains(construction.graph, pattern, use_cache=False)
            assert (hinted is None) == (plain is None)
            if hinted is not None:
                assert validate_witness(construction.graph, pattern, hinted)

    @pytest.mark.property
    @given(graphs(max_n=7), graphs(min_n=2, max_n=5))
    @hsettings(max_examples=80, deadline=None)
    def test_deleting_a_pattern_edge_keeps_containment(self, host: Graph, pattern: Graph) -> None:
        if not pattern.edges or contains(host, pattern) is None:
            return
        u, v = pattern.edges[0]
        assert contains(host, pattern.remove_edge(u, v)) is not None

    def test_budget_exhaustion_is_not_absence(self) -> None:
        with pytest.raises(BudgetExceeded) as exc_info:
            contains(turan(8, 2), complete(3), max_nodes=1, use_cache=False)
        assert exc_info.value.code == "containment_budget_exceeded"
        assert exc_info.value.details["max_nodes"] == 1

    def test_budget_failures_are_not_cached(self) -> None:
        with pytest.raises(BudgetExceeded):
            contains(turan(8, 2), complete(3), max_nodes=1)
        assert len(query_cache) == 0
        assert contains(turan(8, 2), complete(3)) is None

    def test_repeated_query_hits_the_cache(self) -> None:
        first = contains(turan(6, 2), cycle(4))
        second = contains(turan(6, 2), cycle(4))
        assert first == second
        assert query_cache.hits == 1

    def test_witness_shape(self) -> None:
        witness = contains(complete(4), path(3))
        assert isinstance(witness, ContainmentWitness)
        assert len(witness.to_list()) == 3

    def test_validate_witness_rejects_bad_maps(self) -> None:
        host, pattern = cycle(4), path(3)
        assert validate_witness(host, pattern, [0, 1, 2])
        assert not validate_witness(host, pattern, [0, 2, 1])
        assert not validate_witness(host, pattern, [0, 1, 1])
        assert not validate_witness(host, pattern, [0, 1])
        assert not validate_witness(host, pattern, [0, 1, 7])


class TestThroughEdge:
    def test_triangle_with_pendant(self) -> None:
        host = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        assert contains_through_edge(host, complete(3), 2, 3) is None
        witness = contains_through_edge(host, complete(3), 0, 1)
        assert witness is not None
        assert {0, 1} <= set(witness.mapping)
        assert contains_through_edge(host, complete(3), 0, 3) is None

    @pytest.mark.property
    @given(graphs(max_n=6), graphs(min_n=2, max_n=4))
    @hsettings(max_examples=80, deadline=None)
    def test_some_edge_carries_every_embedding(self, host: Graph, pattern: Graph) -> None:
        if not pattern.edges:
            return
        through_any = False
        for u, v in host.edges:
            witness = contains_through_edge(host, pattern, u, v)
            if witness is not None:
                assert validate_witness(host, pattern, witness)
                mapped = {witness.mapping[a] for a in range(pattern.n)}
                assert {u, v} <= mapped
                through_any = True
        assert through_any == (contains(host, pattern) is not None)


# ============================================================================
# Product hosts and freeness
# ============================================================================


class TestProductHost:
    def test_layout_and_symmetry(self) -> None:
        construction = product_host(path(2), 3, 2)
        assert construction.graph.n == ProductHostSpec(path(2), 3, 2).order == 8
        assert set(construction.symmetry) == {(2, 3), (0, 1), (4, 5), (6, 7)}

    def test_edgeless_m_gives_a_complete_multipartite_host(self) -> None:
        assert contains_in_product(empty(1), 3, 2, complete(3)) is not None
        assert contains_in_product(empty(1), 3, 2, complete(4)) is None

    def test_an_edge_in_m_raises_the_clique_number(self) -> None:
        assert contains_in_product(path(2), 3, 1, complete(4)) is not None

    @pytest.mark.parametrize("pattern", [cycle(5), complete(4), matching(3), star(4), path(6)])
    def test_symmetry_does_not_change_answers(self, pattern: Graph) -> None:
        m = disjoint_union(path(3), empty(1))
        hinted = contains_in_product(m, 3, 2, pattern)
        plain = contains_in_product(m, 3, 2, pattern, use_symmetry=False)
        assert (hinted is None) == (plain is None)

    @pytest.mark.parametrize(("p", "t"), [(1, 2), (3, 0)])
    def test_invalid_parameters(self, p: int, t: int) -> None:
        with pytest.raises(ConstructionError):
            ProductHostSpec(path(2), p, t)


class TestFreeness:
    def test_free(self) -> None:
        result = is_family_free(cycle(5), GraphFamily([complete(3), cycle(4)]))
        assert result.free
        assert bool(result)
        assert result.member is None

    def test_reports_smallest_member_found(self) -> None:
        result = is_family_free(complete(4), GraphFamily([cycle(4), complete(3)]))
        assert not result
        assert result.member == complete(3)
        assert result.witness is not None
        assert validate_witness(complete(4), complete(3), result.witness)


class TestQueryCache:
    def test_lru_eviction(self) -> None:
        cache = QueryCache(max_size=2)
        cache.put("a", 1)
        cache.put("b", 2)
        assert cache.get("a") == (True, 1)
        cache.put("c", 3)
        assert cache.get("b") == (False, None)
        assert len(cache) == 2
        assert (cache.hits, cache.misses) == (1, 1)

    def test_disabled_cache_stores_nothing(self) -> None:
        cache = QueryCache(max_size=4, enabled=False)
        cache.put("a", 1)
        assert cache.get("a") == (False, None)
        assert QueryCache(max_size=0).enabled is False
