"""Pydantic models for extremal-number searches and their cache records."""

from __future__ import annotations

from datetime import UTC, datetime
from enum import Enum

from pydantic import BaseModel, Field

from turanlab.config.settings import settings
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.graph.graph6 import graph6_decode
from turanlab.version import SOLVER_VERSION


class SolverMode(str, Enum):
    """Search procedure; ``both`` runs the two and cross-checks them."""

    ENUMERATE = "enumerate"
    BRANCH_BOUND = "branch_bound"
    BOTH = "both"

    @classmethod
    def _missing_(cls, value: object) -> "SolverMode | None":
        # short names accepted on the command line
        if isinstance(value, str):
            return _MODE_ALIASES.get(value.strip().lower())
        return None


_MODE_ALIASES = {"enum": SolverMode.ENUMERATE, "bb": SolverMode.BRANCH_BOUND}


class SearchStats(BaseModel):
    """Effort counters for one search."""

    nodes_expanded: int = Field(default=0, ge=0, description="Search nodes visited")
    prunes_by_bound: int = Field(default=0, ge=0, description="Subtrees cut by the edge bound")
    prunes_by_containment: int = Field(
        default=0, ge=0, description="Edge insertions rejected because they created a member"
    )
    iso_rejections: int = Field(default=0, ge=0, description="States dropped as isomorphic duplicates")
    elapsed_seconds: float = Field(default=0.0, ge=0.0, description="Wall-clock time")

    def merged(self, other: SearchStats) -> SearchStats:
        return SearchStats(
            nodes_expanded=self.nodes_expanded + other.nodes_expanded,
            prunes_by_bound=self.prunes_by_bound + other.prunes_by_bound,
            prunes_by_containment=self.prunes_by_containment + other.prunes_by_containment,
            iso_rejections=self.iso_rejections + other.iso_rejections,
            elapsed_seconds=max(self.elapsed_seconds, other.elapsed_seconds),
        )


class SearchBudget(BaseModel):
    """Limits for one search; running out yields an incomplete result."""

    max_nodes: int = Field(default=100_000_000, ge=1, description="Search-node budget")
    max_seconds: float | None = Field(default=None, gt=0, description="Wall-clock budget")
    workers: int = Field(default=1, ge=1, description="Worker processes for subtree fan-out")

    @classmethod
    def from_settings(cls) -> SearchBudget:
        return cls(
            max_nodes=settings.solver.max_nodes,
            max_seconds=settings.solver.max_seconds,
            workers=settings.solver.workers,
        )


class ExtremalResult(BaseModel):
    """Value of ex(n, F) with its extremal graphs.

    ``complete`` is false when the budget ran out; ``max_edges`` is then only
    a lower bound and ``extremal`` holds the best graphs found so far.
    """

    n: int = Field(ge=0, description="Number of vertices")
    family_key: list[str] = Field(description="Sorted canonical graph6 strings of the forbidden family")
    max_edges: int = Field(ge=0, description="Maximum edge count of a family-free graph")
    extremal: list[str] = Field(
        default_factory=list,
        description="Canonical graph6 strings of the extremal graphs, sorted",
    )
    stats: SearchStats = Field(default_factory=SearchStats)
    mode: SolverMode = Field(description="Procedure that produced the result")
    complete: bool = Field(default=True, description="False when the search budget ran out")
    all_extremal: bool = Field(default=True, description="Whether every extremal class was collected")
    witness_overflow: bool = Field(default=False, description="Witness cap reached; list is partial")
    solver_version: str = Field(default=SOLVER_VERSION)
    timestamp: datetime = Field(default_factory=lambda: datetime.now(UTC))

    def witnesses(self) -> GraphFamily:
        return GraphFamily(graph6_decode(form) for form in self.extremal)

    def witness_graphs(self) -> list[Graph]:
        return [graph6_decode(form) for form in self.extremal]

    @property
    def status(self) -> str:
        return "complete" if self.complete else "incomplete"


class CacheKey(BaseModel):
    n: int = Field(ge=0)
    family_key: list[str]
    mode: SolverMode
    all_extremal: bool = False

    def token(self) -> str:
        flag = "all" if self.all_extremal else "one"
        return f"{self.n}|{','.join(self.family_key)}|{self.mode.value}|{flag}"


class CacheRecord(BaseModel):
    """One line of the JSON-lines result cache."""

    key: CacheKey
    result: ExtremalResult
    solver_version: str = Field(default=SOLVER_VERSION)
    timestamp: datetime = Field(default_factory=lambda: datetime.now(UTC))


__all__ = [
    "CacheKey",
    "CacheRecord",
    "ExtremalResult",
    "SearchBudget",
    "SearchStats",
    "SolverMode",
]
