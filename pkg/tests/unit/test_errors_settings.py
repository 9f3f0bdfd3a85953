"""Structured errors, the settings tree and process fan-out."""

import json
import math
from pathlib import Path

import pytest
from pydantic import ValidationError

from turanlab.config.settings import (
    ContainmentSettings,
    Environment,
    GraphSettings,
    Settings,
    SolverSettings,
)
from turanlab.errors import (
    BudgetExceeded,
    ConstructionError,
    Graph6DecodeError,
    HypothesisViolation,
    LabError,
    SpecParseError,
    ensure_lab_error,
    parse_lab_error,
)
from turanlab.parallel import fan_out


pytestmark = pytest.mark.unit


# ============================================================================
# Errors
# ============================================================================


class TestLabError:
    @pytest.mark.parametrize(
        ("error_type", "code", "phase"),
        [
            (ConstructionError, "construction_invalid", "constructions"),
            (SpecParseError, "spec_parse_error", "constructions"),
            (BudgetExceeded, "containment_budget_exceeded", "containment"),
            (HypothesisViolation, "hypothesis_violation", "lab"),
        ],
    )
    def test_default_codes(self, error_type: type[LabError], code: str, phase: str) -> None:
        error = error_type("nope")
        assert (error.code, error.phase, error.message) == (code, phase, "nope")
        assert isinstance(error, LabError)

    def test_explicit_code_wins(self) -> None:
        error = ConstructionError("bad split", code="split_cap_exceeded", details={"n": 13})
        assert error.code == "split_cap_exceeded"
        assert error.phase == "constructions"
        assert error.details == {"n": 13}

    def test_graph6_offset(self) -> None:
        error = Graph6DecodeError("byte out of range", offset=3, text="A!")
        assert error.offset == 3
        assert error.details == {"offset": 3, "text": "A!"}
        assert str(error).endswith("(byte 3)")

    def test_json_round_trip(self) -> None:
        error = BudgetExceeded("ran out", details={"max_nodes": 10})
        payload = json.loads(error.to_json())
        assert payload["code"] == "containment_budget_exceeded"
        restored = parse_lab_error(error.to_json())
        assert restored is not None
        assert restored.to_dict() == error.to_dict()

    @pytest.mark.parametrize(
        "payload",
        [None, "", "{not json", "[1, 2]", '{"code": "x", "phase": "y"}', '{"code": 1, "phase": "y", "message": "m"}'],
    )
    def test_parse_rejects_malformed_payloads(self, payload: str | None) -> None:
        assert parse_lab_error(payload) is None

    def test_parse_tolerates_bad_details(self) -> None:
        restored = parse_lab_error('{"code": "c", "phase": "p", "message": "m", "details": [1]}')
        assert restored is not None
        assert restored.details == {}

    def test_ensure_keeps_lab_errors(self) -> None:
        error = SpecParseError("bad")
        assert ensure_lab_error(error) is error

    def test_ensure_wraps_other_exceptions(self) -> None:
        wrapped = ensure_lab_error(KeyError("k"), details={"spec": "x"})
        assert wrapped.code == "lab_unexpected_error"
        assert wrapped.details == {"spec": "x", "exception_type": "KeyError"}
        assert ensure_lab_error(ValueError()).message == "Unknown error"


# ============================================================================
# Settings
# ============================================================================


class TestSettings:
    def test_defaults(self) -> None:
        assert GraphSettings.model_fields["invariant_cap"].default == 64
        assert GraphSettings.model_fields["split_cap"].default == 12
        assert ContainmentSettings.model_fields["query_cache_size"].default == 4096
        assert SolverSettings.model_fields["max_nodes"].default == 100_000_000
        assert SolverSettings.model_fields["cache_path"].default is None

    def test_env_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SOLVER_MAX_NODES", "1000")
        monkeypatch.setenv("SOLVER_WORKERS", "3")
        solver = SolverSettings()
        assert solver.max_nodes == 1000
        assert solver.workers == 3

    def test_blank_cache_path_is_unset(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("SOLVER_CACHE_PATH", "   ")
        assert SolverSettings().cache_path is None

    def test_cache_path_expands_home(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
        monkeypatch.setenv("HOME", str(tmp_path))
        monkeypatch.setenv("SOLVER_CACHE_PATH", "~/ex.jsonl")
        assert SolverSettings().cache_path == tmp_path / "ex.jsonl"

    def test_out_of_range_values_are_rejected(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("GRAPH_SPLIT_CAP", "40")
        with pytest.raises(ValidationError):
            GraphSettings()

    def test_environment_is_normalised(self) -> None:
        configured = Settings(environment="PRODUCTION")  # type: ignore[arg-type]
        assert configured.environment is Environment.PROD
        assert configured.is_production


# ============================================================================
# Fan-out
# ============================================================================


def _square(x: int) -> int:
    return x * x


class TestFanOut:
    def test_in_process_keeps_order(self) -> None:
        assert fan_out(_square, [3, 1, 2]) == [9, 1, 4]
        assert fan_out(_square, [], workers=4) == []

    @pytest.mark.slow
    def test_worker_pool_keeps_order(self) -> None:
        assert fan_out(math.factorial, [5, 3, 4, 1], workers=2) == [120, 6, 24, 1]

    def test_first_failure_is_raised(self) -> None:
        with pytest.raises(ZeroDivisionError):
            fan_out(lambda x: 1 // x, [1, 0, 2])
