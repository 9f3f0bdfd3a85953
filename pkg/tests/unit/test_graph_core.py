"""Graph values, operations and named graphs."""

import networkx as nx
import pytest
from hypothesis import given, settings

from tests.strategies import graph_and_permutation, graphs
from turanlab.errors import GraphSizeError, LabError
from turanlab.graph.core import Graph, iter_bits, mask_of
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
from turanlab.graph.operations import disjoint_union, join, join_all, k_copies, union_all


pytestmark = pytest.mark.unit


class TestGraphValue:
    def test_edges_are_lexicographic(self) -> None:
        g = Graph.from_edges(4, [(2, 3), (0, 2), (1, 0)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))
        assert g.num_edges == 3

    def test_duplicate_edges_collapse(self) -> None:
        assert Graph.from_edges(3, [(0, 1), (1, 0)]).num_edges == 1

    @pytest.mark.parametrize(
        ("n", "rows"),
        [
            (2, (1, 0)),  # asymmetric
            (2, (1, 2)),  # self-loop at 0
            (2, (4, 1)),  # out of range bit
            (3, (0, 0)),  # wrong row count
        ],
    )
    def test_invalid_rows_rejected(self, n: int, rows: tuple[int, ...]) -> None:
        with pytest.raises(LabError) as exc_info:
            Graph(n, rows)
        assert exc_info.value.code == "graph_invalid"

    def test_self_loop_edge_rejected(self) -> None:
        with pytest.raises(LabError):
            Graph.from_edges(3, [(1, 1)])

    def test_order_cap(self) -> None:
        with pytest.raises(GraphSizeError) as exc_info:
            Graph.empty(1025)
        assert exc_info.value.details["max_vertices"] == 1024

    def test_mutators_return_new_graphs(self) -> None:
        g = path(3)
        h = g.add_edge(0, 2)
        assert g.num_edges == 2
        assert h.num_edges == 3
        assert h.remove_edge(0, 2) == g

    def test_induced_and_strip_isolated(self) -> None:
        g = Graph.from_edges(5, [(1, 3), (3, 4)])
        assert g.isolated_vertices() == [0, 2]
        stripped = g.strip_isolated()
        assert stripped.n == 3
        assert stripped.edges == ((0, 1), (1, 2))
        connected = path(4)
        assert connected.strip_isolated() is connected

    def test_relabel_rejects_non_permutation(self) -> None:
        with pytest.raises(LabError):
            path(3).relabel([0, 0, 1])

    def test_twin_classes(self) -> None:
        assert star(3).twin_classes() == [(1, 2, 3)]
        assert complete(3).twin_classes() == [(0, 1, 2)]
        assert path(4).twin_classes() == []

    def test_complement(self) -> None:
        assert cycle(5).complement().num_edges == 5
        assert complete(4).complement() == empty(4)

    @given(graphs(max_n=8))
    @settings(max_examples=50, deadline=None)
    def test_networkx_conversion_preserves_labels(self, g: Graph) -> None:
        assert Graph.from_networkx(g.to_networkx()) == g

    @given(graph_and_permutation(max_n=7))
    @settings(max_examples=50, deadline=None)
    def test_relabel_preserves_degrees(self, pair: tuple[Graph, list[int]]) -> None:
        g, perm = pair
        h = g.relabel(perm)
        assert h.num_edges == g.num_edges
        assert all(h.degree(perm[v]) == g.degree(v) for v in range(g.n))

    def test_bit_helpers(self) -> None:
        assert list(iter_bits(0b101001)) == [0, 3, 5]
        assert mask_of([0, 3, 5]) == 0b101001


class TestNamedGraphs:
    @pytest.mark.parametrize(
        ("g", "n", "e"),
        [
            (path(1), 1, 0),
            (path(5), 5, 4),
            (cycle(6), 6, 6),
            (star(3), 4, 3),
            (matching(3), 6, 3),
            (complete(5), 5, 10),
            (empty(4), 4, 0),
            (complete_multipartite([2, 2, 2]), 6, 12),
            (subdivided_star(3), 7, 6),
        ],
    )
    def test_orders_and_sizes(self, g: Graph, n: int, e: int) -> None:
        assert (g.n, g.num_edges) == (n, e)

    @pytest.mark.parametrize(("builder", "arg"), [(path, 0), (cycle, 2), (star, 0), (subdivided_star, 0)])
    def test_degenerate_parameters(self, builder: object, arg: int) -> None:
        with pytest.raises(ValueError):
            builder(arg)  # type: ignore[operator]

    def test_multipartite_matches_networkx(self) -> None:
        ours = complete_multipartite([1, 2, 3])
        theirs = Graph.from_networkx(nx.complete_multipartite_graph(1, 2, 3))
        assert ours == theirs


class TestOperations:
    def test_disjoint_union_shifts_right_operand(self) -> None:
        g = disjoint_union(path(2), path(3))
        assert g.edges == ((0, 1), (2, 3), (3, 4))

    def test_join_adds_all_cross_edges(self) -> None:
        g = join(empty(2), empty(3))
        assert g == complete_multipartite([2, 3])

    def test_k_copies(self) -> None:
        assert k_copies(path(2), 3) == matching(3)
        assert k_copies(path(3), 0).n == 0
        with pytest.raises(ValueError):
            k_copies(path(2), -1)

    def test_union_and_join_all(self) -> None:
        assert union_all([path(2), path(2)]) == matching(2)
        assert join_all([empty(1), empty(1), empty(1)]) == complete(3)
