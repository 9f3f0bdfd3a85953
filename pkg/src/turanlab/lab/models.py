"""Verification report models."""

from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, computed_field


REPORT_SCHEMA_VERSION = 1


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class SkipReason(str, Enum):
    """Why a check was not decided."""

    BUDGET = "budget"  # search ran out; the claim is still open
    NOT_APPLICABLE = "not_applicable"  # hypotheses of the claim do not hold


class AggregateStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCOMPLETE = "incomplete"


class Check(BaseModel):
    """One verified claim."""

    claim: str = Field(description="Claim text")
    anchor: str = Field(default="", description="Where the claim comes from")
    status: CheckStatus
    reason: SkipReason | None = Field(default=None, description="Set on skipped checks")
    evidence: dict[str, Any] = Field(default_factory=dict, description="Counts, witnesses (graph6)")


class VerificationReport(BaseModel):
    """Outcome of one recipe run.

    ``aggregate`` is ``fail`` when any check fails, ``incomplete`` when a
    check was skipped for lack of budget, and ``pass`` otherwise.
    """

    schema_version: int = Field(default=REPORT_SCHEMA_VERSION)
    command: str = Field(description="Recipe name")
    params: dict[str, Any] = Field(default_factory=dict)
    checks: list[Check] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list, description="Threshold and overlap annotations")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def aggregate(self) -> AggregateStatus:
        statuses = [check.status for check in self.checks]
        if CheckStatus.FAIL in statuses:
            return AggregateStatus.FAIL
        if any(check.status is CheckStatus.SKIPPED and check.reason is SkipReason.BUDGET for check in self.checks):
            return AggregateStatus.INCOMPLETE
        return AggregateStatus.PASS

    @computed_field  # type: ignore[prop-decorator]
    @property
    def stats(self) -> dict[str, int]:
        return {
            "checks": len(self.checks),
            "passed": sum(check.status is CheckStatus.PASS for check in self.checks),
            "failed": sum(check.status is CheckStatus.FAIL for check in self.checks),
            "skipped": sum(check.status is CheckStatus.SKIPPED for check in self.checks),
        }

    @property
    def passed(self) -> bool:
        return self.aggregate is AggregateStatus.PASS


__all__ = [
    "REPORT_SCHEMA_VERSION",
    "AggregateStatus",
    "Check",
    "CheckStatus",
    "SkipReason",
    "VerificationReport",
]
