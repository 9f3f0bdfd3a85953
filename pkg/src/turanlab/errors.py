"""Structured error types shared by every turanlab layer."""

from __future__ import annotations

import json
from datetime import UTC, datetime
from typing import Any


class LabError(RuntimeError):
    """Structured exception carrying a machine-readable code and phase."""

    default_code = "lab_error"
    default_phase = "lab"

    def __init__(
        self,
        message: str,
        *,
        code: str | None = None,
        phase: str | None = None,
        details: dict[str, Any] | None = None,
        timestamp: str | None = None,
    ) -> None:
        super().__init__(message)
        self.code = code or self.default_code
        self.phase = phase or self.default_phase
        self.message = message
        self.details = details or {}
        self.timestamp = timestamp or datetime.now(UTC).isoformat()

    def to_dict(self) -> dict[str, Any]:
        """Serialize the error for logs and report surfaces."""
        return {
            "code": self.code,
            "phase": self.phase,
            "message": self.message,
            "details": self.details,
            "timestamp": self.timestamp,
        }

    def to_json(self) -> str:
        """Serialize the error as a compact JSON string."""
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=True, default=str)


class Graph6DecodeError(LabError):
    """Malformed graph6/sparse6 input; ``offset`` is the offending byte index."""

    default_code = "graph6_decode_error"
    default_phase = "graph"

    def __init__(self, message: str, *, offset: int, text: str | None = None) -> None:
        details: dict[str, Any] = {"offset": offset}
        if text is not None:
            details["text"] = text
        super().__init__(f"{message} (byte {offset})", details=details)
        self.offset = offset


class GraphSizeError(LabError):
    default_code = "graph_size_exceeded"
    default_phase = "graph"


class InvariantCapExceeded(LabError):
    """Exact chromatic/independence computation refused above the configured cap."""

    default_code = "invariant_cap_exceeded"
    default_phase = "graph"


class ConstructionError(LabError):
    default_code = "construction_invalid"
    default_phase = "constructions"


class SpecParseError(LabError):
    default_code = "spec_parse_error"
    default_phase = "constructions"


class BudgetExceeded(LabError):
    """A containment search ran out of nodes; distinct from a proven absence."""

    default_code = "containment_budget_exceeded"
    default_phase = "containment"


class HypothesisViolation(LabError):
    """Inputs fall outside the hypotheses that license a computation."""

    default_code = "hypothesis_violation"
    default_phase = "lab"


def ensure_lab_error(
    error: Exception,
    *,
    code: str = "lab_unexpected_error",
    phase: str = "lab",
    details: dict[str, Any] | None = None,
) -> LabError:
    """Normalize unknown exceptions into a structured lab error."""
    if isinstance(error, LabError):
        return error

    merged_details = dict(details or {})
    merged_details.setdefault("exception_type", type(error).__name__)

    return LabError(
        str(error) or "Unknown error",
        code=code,
        phase=phase,
        details=merged_details,
    )


def parse_lab_error(payload: str | None) -> LabError | None:
    """Parse a serialized lab error payload."""
    if not payload:
        return None

    try:
        data = json.loads(payload)
    except json.JSONDecodeError:
        return None

    if not isinstance(data, dict):
        return None

    code = data.get("code")
    phase = data.get("phase")
    message = data.get("message")
    if not isinstance(code, str) or not isinstance(phase, str) or not isinstance(message, str):
        return None

    details = data.get("details")
    timestamp = data.get("timestamp")
    return LabError(
        message,
        code=code,
        phase=phase,
        details=details if isinstance(details, dict) else {},
        timestamp=timestamp if isinstance(timestamp, str) else None,
    )


__all__ = [
    "BudgetExceeded",
    "ConstructionError",
    "Graph6DecodeError",
    "GraphSizeError",
    "HypothesisViolation",
    "InvariantCapExceeded",
    "LabError",
    "SpecParseError",
    "ensure_lab_error",
    "parse_lab_error",
]
