"""Tree classification, predictions, verification recipes and report output."""

import json

import pytest

from turanlab.config.settings import OutputFormat
from turanlab.constructions.builders import h_edge_count, turan_edge_count
from turanlab.constructions.spec import ConstructionSpec, SpecKind, build, parse_spec
from turanlab.errors import HypothesisViolation, LabError
from turanlab.graph.core import Graph
from turanlab.graph.named import cycle, path, star, subdivided_star
from turanlab.lab.models import AggregateStatus, Check, CheckStatus, SkipReason, VerificationReport
from turanlab.lab.predictions import BlowupKind, Prediction, predict_tree, predicted_value, star_constant
from turanlab.lab.recipes import (
    load_claims,
    parse_range,
    verify_edge_law,
    verify_figure_claims,
    verify_freeness_sweep,
    verify_path_blowup_claims,
    verify_split_family,
    verify_star_constant,
    verify_tfree,
)
from turanlab.lab.report import TSV_COLUMNS, emit_report
from turanlab.lab.trees import TreeVerdict, classify_tree


pytestmark = pytest.mark.unit


# ============================================================================
# Trees
# ============================================================================


class TestClassifyTree:
    @pytest.mark.parametrize("k", range(2, 10))
    def test_paths_alternate_between_cases(self, k: int) -> None:
        expected = TreeVerdict.CASE_I if k % 2 == 0 else TreeVerdict.CASE_II
        assert classify_tree(path(k)).verdict is expected

    def test_four_vertex_path(self) -> None:
        result = classify_tree(path(4))
        assert (result.a, result.b) == (2, 2)
        assert result.leaf_in_a
        assert result.alpha_equals_b
        assert result.predicted(12, 3) == ConstructionSpec(SpecKind.H, params=(12, 3, 2))

    @pytest.mark.parametrize(
        ("tree", "verdict"),
        [
            (path(6), TreeVerdict.CASE_I),
            (Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]), TreeVerdict.NEITHER),
        ],
    )
    def test_balanced_classes_ignore_which_side_holds_vertex_zero(self, tree: Graph, verdict: TreeVerdict) -> None:
        swapped = tree.relabel([1, 0, 2, 3, 4, 5])
        for t in (tree, swapped):
            result = classify_tree(t)
            assert (result.a, result.b) == (3, 3)
            assert result.verdict is verdict
            assert not result.overlap

    def test_three_vertex_path(self) -> None:
        result = classify_tree(path(3))
        assert result.a_class == (1,)
        assert result.min_degree_a_is_two
        assert not result.leaf_in_a
        assert str(result.predicted(10, 3)) == "hprime:10,3,1"

    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    def test_subdivided_stars_are_case_two(self, r: int) -> None:
        result = classify_tree(subdivided_star(r))
        assert result.verdict is TreeVerdict.CASE_II
        assert result.a_class == tuple(range(1, r + 1))

    def test_star_is_neither(self) -> None:
        result = classify_tree(star(3))
        assert result.verdict is TreeVerdict.NEITHER
        assert result.predicted(10, 3) is None

    def test_non_tree_is_refused(self) -> None:
        with pytest.raises(HypothesisViolation) as exc_info:
            classify_tree(cycle(4))
        assert exc_info.value.code == "not_a_tree"


# ============================================================================
# Predictions
# ============================================================================


class TestPredictions:
    @pytest.mark.parametrize(("k", "constant"), [(1, 0), (2, 1), (3, 6), (4, 10), (5, 20)])
    def test_star_constant(self, k: int, constant: int) -> None:
        assert star_constant(k) == constant

    def test_star_constant_needs_a_leaf(self) -> None:
        with pytest.raises(LabError):
            star_constant(0)

    def test_star_prediction(self) -> None:
        prediction = predicted_value("star", 10, 2, k=2)
        assert prediction.value == 26
        assert prediction.construction == "turan:10,2"
        assert prediction.threshold_met is False
        assert "threshold not met" in prediction.annotation()

    def test_star_offset_is_constant_in_n(self) -> None:
        for n in range(2 * 3, 41):
            prediction = predicted_value(BlowupKind.STAR, n, 2, k=2)
            assert prediction.value - turan_edge_count(n, 2) == star_constant(2)

    def test_triangle_blow_up_of_triangle(self) -> None:
        prediction = predicted_value("cycle", 8, 2, k=3)
        assert prediction.value == 20
        assert prediction.construction == "hstar:8"
        assert prediction.threshold_met is None
        assert "not quantified" in prediction.annotation()

    def test_odd_path(self) -> None:
        prediction = predicted_value("path", 12, 3, k=3)
        assert prediction.value == h_edge_count(12, 3, 2) == 51
        assert prediction.construction == "h:12,3,2"

    def test_even_path_adds_an_edge(self) -> None:
        prediction = predicted_value("path", 12, 3, k=2)
        assert prediction.value == turan_edge_count(12, 3) + 1
        assert prediction.construction == "hprime:12,3,1"

    def test_even_cycle(self) -> None:
        prediction = predicted_value("cycle", 20, 3, k=4)
        assert prediction.value == h_edge_count(20, 3, 2) + 1

    def test_tree_predictions(self) -> None:
        assert predict_tree(path(4), 3, 10).construction == "h:10,3,2"
        assert predict_tree(path(5), 3, 10).value == h_edge_count(10, 3, 2) + 1

    def test_tree_prediction_hypotheses(self) -> None:
        with pytest.raises(HypothesisViolation):
            predict_tree(path(4), 2, 10)
        with pytest.raises(HypothesisViolation) as exc_info:
            predict_tree(star(3), 3, 10)
        assert exc_info.value.code == "tree_unclassified"

    def test_missing_parameters(self) -> None:
        with pytest.raises(LabError):
            predicted_value("tree", 10, 3)
        with pytest.raises(LabError):
            predicted_value("star", 10, 3)
        with pytest.raises(ValueError):
            predicted_value("wheel", 10, 3, k=2)

    def test_annotation_when_met(self) -> None:
        prediction = Prediction(kind=BlowupKind.STAR, n=50, p=2, value=0, construction="turan:50,2", threshold=40)
        assert prediction.threshold_met
        assert prediction.annotation() == "star: n=50 meets threshold 40"


# ============================================================================
# Recipes
# ============================================================================


class TestRecipes:
    def test_parse_range(self) -> None:
        assert parse_range("3..6") == range(3, 7)
        assert parse_range("5") == range(5, 6)
        for bad in ("x", "6..3", "3.."):
            with pytest.raises(LabError):
                parse_range(bad)

    def test_claims_table_shape(self) -> None:
        claims = load_claims()
        assert set(claims) == {"cycle_claims", "path_claims"}
        for entries in claims.values():
            for entry in entries:
                assert entry["kind"] in {"member", "contains"}
                assert entry["anchor"]

    @pytest.mark.parametrize("k", [3, 4])
    def test_figure_claims(self, k: int) -> None:
        report = verify_figure_claims(k)
        assert report.checks
        assert report.aggregate is AggregateStatus.PASS

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [5, 6, 7])
    def test_figure_claims_larger_k(self, k: int) -> None:
        assert verify_figure_claims(k).aggregate is AggregateStatus.PASS

    def test_figure_claims_range(self) -> None:
        with pytest.raises(LabError) as exc_info:
            verify_figure_claims(2)
        assert exc_info.value.code == "parameters_invalid"

    @pytest.mark.parametrize("k", [2, 3])
    def test_path_claims(self, k: int) -> None:
        report = verify_path_blowup_claims(k)
        assert len(report.checks) == 2
        assert report.passed
        assert [check.anchor for check in report.checks] == ["path3/padded-matchings-host", "path3/cherries-host"]

    @pytest.mark.parametrize("k", [2, 4, 6])
    def test_unpadded_matchings_host_is_too_small_for_even_k(self, k: int) -> None:
        pattern = build(parse_spec(f"blowup:path:{k + 1},3")).graph
        unpadded = build(parse_spec(f"join:(copies:{k // 2},path:2)*(copies:{k // 2},path:2)")).graph
        assert (pattern.n, unpadded.n) == (2 * k + 1, 2 * k)

    def test_freeness_of_the_triangle_constructions(self) -> None:
        report = verify_freeness_sweep(["hstar:{n}", "h:{n},2,2"], ["blowup:cycle:3,3"], range(6, 13))
        assert report.stats == {"checks": 14, "passed": 14, "failed": 0, "skipped": 0}
        assert report.params["n"] == [6, 12]

    @pytest.mark.slow
    def test_freeness_of_the_triangle_constructions_to_forty(self) -> None:
        report = verify_freeness_sweep(["hstar:{n}", "h:{n},2,2"], ["blowup:cycle:3,3"], range(6, 41))
        assert report.passed

    def test_freeness_failure_carries_evidence(self) -> None:
        report = verify_freeness_sweep(["turan:{n},3"], ["complete:3"], range(4, 6))
        assert report.aggregate is AggregateStatus.FAIL
        failed = report.checks[0]
        assert failed.evidence["member"] == "Bw"
        assert len(failed.evidence["embedding"]) == 3

    def test_freeness_inapplicable_construction_is_skipped(self) -> None:
        report = verify_freeness_sweep(["turan:{n},5"], ["complete:3"], range(3, 5))
        assert all(check.reason is SkipReason.NOT_APPLICABLE for check in report.checks)
        assert report.aggregate is AggregateStatus.PASS

    @pytest.mark.parametrize(("tree", "m"), [(path(4), 8), (path(2), 3), (path(6), 5)])
    def test_clique_join_avoids_split_family(self, tree: Graph, m: int) -> None:
        report = verify_tfree(tree, m)
        assert report.passed
        assert report.params["split_family_size"] == len(report.checks)

    def test_clique_join_needs_case_one(self) -> None:
        with pytest.raises(HypothesisViolation):
            verify_tfree(subdivided_star(3), 5)
        with pytest.raises(LabError):
            verify_tfree(path(4), 0)

    def test_split_family_below_licensed_range_is_skipped(self) -> None:
        report = verify_split_family(cycle(3), 2)
        (check,) = report.checks
        assert check.status is CheckStatus.SKIPPED
        assert check.reason is SkipReason.NOT_APPLICABLE
        assert check.evidence["agree_without_license"] is False
        assert report.aggregate is AggregateStatus.PASS
        assert any("refused" in note for note in report.notes)

    @pytest.mark.slow
    def test_split_family_agrees_for_a_path(self) -> None:
        report = verify_split_family(path(3), 3)
        assert report.checks[0].status is CheckStatus.PASS

    def test_star_constant_small(self) -> None:
        report = verify_star_constant(2, 2, range(3, 7))
        assert report.passed
        assert [check.evidence["enumerate"] for check in report.checks] == [1, 1, 1, 1]
        assert len(report.notes) == 2

    @pytest.mark.slow
    def test_star_constant_three(self) -> None:
        assert verify_star_constant(3, 2, range(6, 9)).passed

    def test_edge_law(self) -> None:
        report = verify_edge_law(range(6, 41))
        assert report.passed
        assert report.stats["checks"] == 35


# ============================================================================
# Reports
# ============================================================================


def _report(*checks: Check) -> VerificationReport:
    return VerificationReport(command="demo", params={"k": 3}, checks=list(checks))


class TestReports:
    def test_empty_report_passes(self) -> None:
        report = _report()
        assert report.aggregate is AggregateStatus.PASS
        assert report.stats == {"checks": 0, "passed": 0, "failed": 0, "skipped": 0}

    def test_aggregate_rules(self) -> None:
        ok = Check(claim="a", status=CheckStatus.PASS)
        bad = Check(claim="b", status=CheckStatus.FAIL)
        out_of_budget = Check(claim="c", status=CheckStatus.SKIPPED, reason=SkipReason.BUDGET)
        inapplicable = Check(claim="d", status=CheckStatus.SKIPPED, reason=SkipReason.NOT_APPLICABLE)
        assert _report(ok, out_of_budget, bad).aggregate is AggregateStatus.FAIL
        assert _report(ok, out_of_budget).aggregate is AggregateStatus.INCOMPLETE
        assert _report(ok, inapplicable).aggregate is AggregateStatus.PASS

    def test_json_is_reproducible(self) -> None:
        report = _report(Check(claim="a", anchor="x", status=CheckStatus.PASS, evidence={"n": 5, "graph": "Bw"}))
        first = emit_report(report, OutputFormat.JSON)
        assert first == emit_report(report, "json")
        payload = json.loads(first)
        assert payload["aggregate"] == "pass"
        assert payload["checks"][0]["evidence"] == {"graph": "Bw", "n": 5}

    def test_tsv_columns_and_escaping(self) -> None:
        report = _report(Check(claim="tab\there", status=CheckStatus.SKIPPED, reason=SkipReason.BUDGET))
        lines = emit_report(report, OutputFormat.TSV).decode().splitlines()
        assert lines[0].split("\t") == list(TSV_COLUMNS)
        assert lines[1].split("\t") == ["tab\\there", "", "skipped", "budget", "{}"]

    def test_human_output_shows_graphs_of_failures(self) -> None:
        report = _report(
            Check(claim="fails", status=CheckStatus.FAIL, evidence={"member": "Bw", "n": 5}),
            Check(claim="holds", status=CheckStatus.PASS, evidence={"host": "A_", "edges": 1}),
        )
        text = emit_report(report, OutputFormat.HUMAN).decode()
        assert text.startswith("demo  [FAIL]")
        assert "member: Bw" in text
        assert "n: 5" in text
        assert "host: A_" in text
        assert "edges: 1" not in text
        assert "2 checks: 1 passed, 1 failed, 0 skipped" in text

    def test_graph6_is_not_a_report_format(self) -> None:
        with pytest.raises(LabError) as exc_info:
            emit_report(_report(), OutputFormat.G6)
        assert exc_info.value.code == "format_unsupported"
