"""Named constructions, blow-ups, vertex splits and the construction-spec grammar."""

import networkx as nx
import pytest

from turanlab.config.settings import settings
from turanlab.constructions.builders import (
    h_edge_count,
    h_graph,
    h_prime,
    h_prime_construction,
    h_star,
    h_star_construction,
    h_star_edge_count,
    q_construction,
    turan,
    turan_classes,
    turan_construction,
    turan_edge_count,
)
from turanlab.constructions.spec import ConstructionSpec, SpecKind, build, build_graph, parse_spec, parse_spec_list
from turanlab.constructions.transforms import blow_up, blow_up_construction, split_family, vertex_split
from turanlab.errors import ConstructionError, LabError, SpecParseError
from turanlab.graph.canonical import are_isomorphic
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.graph.invariants import chromatic_number
from turanlab.graph.named import complete, complete_multipartite, cycle, empty, matching, path, star
from turanlab.graph.operations import disjoint_union, join, k_copies


pytestmark = pytest.mark.unit


# ============================================================================
# Builders
# ============================================================================


class TestTuran:
    def test_classes_are_balanced(self) -> None:
        assert turan_classes(7, 3) == [3, 2, 2]
        assert turan_classes(6, 3) == [2, 2, 2]
        assert turan_classes(2, 2) == [1, 1]

    @pytest.mark.parametrize(("n", "p"), [(2, 3), (5, 0)])
    def test_invalid_parameters(self, n: int, p: int) -> None:
        with pytest.raises(ConstructionError) as exc_info:
            turan_classes(n, p)
        assert exc_info.value.details == {"n": n, "p": p}

    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
    def test_edge_count_matches_networkx(self, p: int) -> None:
        for n in range(p, 40):
            assert turan_edge_count(n, p) == nx.turan_graph(n, p).number_of_edges()
            assert turan(n, p).num_edges == turan_edge_count(n, p)

    def test_symmetry_groups_are_the_classes(self) -> None:
        construction = turan_construction(5, 2)
        assert construction.symmetry == ((0, 1, 2), (3, 4))
        assert construction.label == "T(5,2)"


class TestHFamily:
    @pytest.mark.parametrize("p", [2, 3, 4])
    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_edge_count_closed_form(self, p: int, s: int) -> None:
        for n in range(p + s - 1, 60):
            assert h_graph(n, p, s).num_edges == h_edge_count(n, p, s)

    def test_s_one_is_turan(self) -> None:
        assert h_graph(9, 3, 1) == turan(9, 3)

    def test_clique_is_joined_to_everything(self) -> None:
        g = h_graph(8, 2, 3)
        assert g.degree(0) == g.degree(1) == 7
        assert g.has_edge(0, 1)
        assert chromatic_number(g) == 4

    def test_h_prime_adds_one_edge_inside_a_class(self) -> None:
        for n in range(6, 20):
            assert h_prime(n, 2, 2).num_edges == h_edge_count(n, 2, 2) + 1

    def test_h_prime_symmetry(self) -> None:
        construction = h_prime_construction(6, 2, 1)
        assert construction.graph.has_edge(0, 1)
        assert construction.symmetry == ((0, 1), (3, 4, 5))

    def test_h_prime_edge_choice(self) -> None:
        g = h_prime(6, 2, 1, class_index=1, edge_choice=(4, 5))
        assert g.has_edge(4, 5)
        assert g == turan(6, 2).add_edge(4, 5)

    @pytest.mark.parametrize(
        ("class_index", "edge_choice"),
        [(2, None), (0, (0, 4)), (0, (1, 1))],
    )
    def test_h_prime_rejects_bad_choice(self, class_index: int, edge_choice: tuple[int, int] | None) -> None:
        with pytest.raises(ConstructionError):
            h_prime_construction(6, 2, 1, class_index, edge_choice)

    def test_h_prime_needs_room_in_the_class(self) -> None:
        with pytest.raises(ConstructionError):
            h_prime_construction(3, 3, 1)

    def test_invalid_h_parameters(self) -> None:
        with pytest.raises(ConstructionError):
            h_graph(3, 3, 2)
        with pytest.raises(ConstructionError):
            h_graph(6, 2, 0)


class TestHStarAndQ:
    def test_h_star_values(self) -> None:
        assert h_star(8).num_edges == 20
        assert h_star(2).num_edges == 1
        for n in range(2, 40):
            assert h_star(n).num_edges == h_star_edge_count(n)

    def test_h_star_is_bipartite_plus_matchings(self) -> None:
        construction = h_star_construction(7)
        assert construction.symmetry == ((0, 1), (2, 3), (4, 5))
        g = construction.graph
        without_matchings = g
        for u, v in construction.symmetry:
            without_matchings = without_matchings.remove_edge(u, v)
        assert without_matchings == complete_multipartite([4, 3])

    def test_h_star_needs_two_vertices(self) -> None:
        with pytest.raises(ConstructionError):
            h_star(1)

    def test_q_construction(self) -> None:
        construction = q_construction(2, 2)
        assert construction.graph == join(empty(1), complete_multipartite([2, 2]))
        assert construction.graph.num_edges == 8
        assert construction.symmetry == ((1, 2), (3, 4))


# ============================================================================
# Transforms
# ============================================================================


class TestBlowUp:
    def test_triangle_blow_up(self) -> None:
        g = blow_up(cycle(3), 3)
        assert (g.n, g.num_edges) == (6, 9)
        assert chromatic_number(g) == 3

    def test_single_edge_becomes_a_clique(self) -> None:
        construction = blow_up_construction(path(2), 4)
        assert construction.graph == complete(4)
        assert construction.symmetry == ((2, 3),)

    def test_q_two_is_identity(self) -> None:
        assert blow_up(cycle(5), 2) == cycle(5)

    def test_every_edge_lies_in_its_own_clique(self) -> None:
        h = star(3)
        g = blow_up(h, 4)
        assert g.n == h.n + 2 * h.num_edges
        assert g.num_edges == 6 * h.num_edges

    def test_clique_size_must_be_at_least_two(self) -> None:
        with pytest.raises(ConstructionError) as exc_info:
            blow_up(path(3), 1)
        assert exc_info.value.details == {"q": 1}


class TestVertexSplit:
    def test_split_middle_of_path(self) -> None:
        g = vertex_split(path(3), [1])
        assert g == Graph.from_edges(4, [(0, 2), (1, 3)])

    def test_split_everything(self) -> None:
        assert vertex_split(cycle(3), [0, 1, 2]) == matching(3)

    def test_split_preserves_edge_count(self) -> None:
        h = complete(4)
        for chosen in ([0], [0, 1], [1, 2, 3]):
            g = vertex_split(h, chosen)
            assert g.num_edges == h.num_edges

    def test_rejects_unknown_vertex(self) -> None:
        with pytest.raises(ConstructionError):
            vertex_split(path(3), [3])

    def test_triangle_split_family(self) -> None:
        family = split_family(cycle(3))
        expected = GraphFamily(
            [cycle(3), path(4), disjoint_union(path(2), path(3)), matching(3)],
        )
        assert family == expected

    def test_split_family_contains_original(self) -> None:
        h = cycle(5)
        family = split_family(h)
        assert h in family
        assert k_copies(path(2), 5) in family
        assert all(g.num_edges == h.num_edges for g in family)

    def test_split_family_of_a_star(self) -> None:
        family = split_family(star(3))
        assert family == GraphFamily([star(3), matching(3)])

    def test_split_cap(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr(settings.graph, "split_cap", 3)
        with pytest.raises(ConstructionError) as exc_info:
            split_family(path(4))
        assert exc_info.value.code == "split_cap_exceeded"

    @pytest.mark.slow
    def test_split_family_parallel_agrees(self) -> None:
        h = complete(4)
        assert split_family(h, workers=2) == split_family(h)


# ============================================================================
# Spec grammar
# ============================================================================


class TestSpecGrammar:
    @pytest.mark.parametrize(
        "text",
        [
            "turan:6,2",
            "h:8,2,3",
            "hprime:8,2,2,1",
            "hstar:9",
            "q:2,3",
            "blowup:cycle:3,3",
            "copies:2,cycle:3",
            "join:(union:path:3+empty:2)*empty:2",
            "multipartite:1,2,3",
            "g6:Bw",
        ],
    )
    def test_str_is_a_fixed_point(self, text: str) -> None:
        spec = parse_spec(text)
        assert str(spec) == text
        assert parse_spec(str(spec)) == spec

    def test_parsed_structure(self) -> None:
        spec = parse_spec("blowup:(h:6,2,2),3")
        assert spec.kind is SpecKind.BLOWUP
        assert spec.params == (3,)
        assert spec.parts == (ConstructionSpec(SpecKind.H, (6, 2, 2)),)

    def test_bare_graph6(self) -> None:
        assert parse_spec("Bw") == ConstructionSpec(SpecKind.RAW, graph6="Bw")
        assert build_graph("Bw") == complete(3)

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("turan:6,2", turan(6, 2)),
            ("copies:2,complete:3", k_copies(complete(3), 2)),
            ("union:path:2+path:3", disjoint_union(path(2), path(3))),
            ("join:empty:2*empty:3", complete_multipartite([2, 3])),
            ("blowup:cycle:3,3", blow_up(cycle(3), 3)),
            ("hstar:8", h_star(8)),
        ],
    )
    def test_build_graph(self, text: str, expected: Graph) -> None:
        assert build_graph(text) == expected

    def test_build_keeps_symmetry_of_parts(self) -> None:
        construction = build(parse_spec("union:turan:4,2+turan:4,2"))
        assert construction.symmetry == ((0, 1), (2, 3), (4, 5), (6, 7))

    def test_raw_spec_from_graph(self) -> None:
        spec = ConstructionSpec.raw(cycle(4))
        assert are_isomorphic(build(spec).graph, cycle(4))

    @pytest.mark.parametrize(
        "text",
        ["", "foo:1", "turan:6", "turan:a,b", "union:(path:3", "path:3)", "copies:2", "blowup:path:3,x"],
    )
    def test_parse_errors(self, text: str) -> None:
        with pytest.raises(SpecParseError) as exc_info:
            parse_spec(text)
        assert exc_info.value.code == "spec_parse_error"

    def test_hprime_needs_both_endpoints(self) -> None:
        with pytest.raises(SpecParseError):
            build(parse_spec("hprime:6,2,1,0,1"))

    @pytest.mark.parametrize("text", ["turan:2,3", "cycle:2", "blowup:path:3,1"])
    def test_build_errors_are_construction_errors(self, text: str) -> None:
        with pytest.raises(ConstructionError):
            build_graph(text)

    def test_bad_graph6_surfaces_as_lab_error(self) -> None:
        with pytest.raises(LabError):
            build_graph("g6:A!")

    def test_spec_list(self) -> None:
        specs = parse_spec_list("cycle:3; turan:6,2 ;")
        assert [str(s) for s in specs] == ["cycle:3", "turan:6,2"]
