"""turanlab Prometheus metrics.

Counters for search effort and verification outcomes. Metrics land in the
default registry only when ``OBS_PROMETHEUS_ENABLED`` is set; otherwise a
private registry keeps library imports side-effect free.
"""

from prometheus_client import REGISTRY, CollectorRegistry, Counter, Gauge

from turanlab.config.settings import settings


registry = REGISTRY if settings.observability.prometheus_enabled else CollectorRegistry()


# ============================================================================
# Counter Metrics - Monotonically increasing values
# ============================================================================

containment_queries_total = Counter(
    name="containment_queries_total",
    documentation="Subgraph containment queries by outcome",
    labelnames=["result"],  # found/absent/budget/cached
    registry=registry,
    namespace=settings.observability.metrics_namespace,
)

containment_nodes_total = Counter(
    name="containment_nodes_total",
    documentation="Search-tree nodes expanded by containment queries",
    registry=registry,
    namespace=settings.observability.metrics_namespace,
)

solver_runs_total = Counter(
    name="solver_runs_total",
    documentation="Extremal solver runs",
    labelnames=["mode", "status"],  # enumerate/branch_bound, complete/incomplete/cached
    registry=registry,
    namespace=settings.observability.metrics_namespace,
)

solver_nodes_total = Counter(
    name="solver_nodes_total",
    documentation="Nodes expanded by the extremal solver",
    labelnames=["mode"],
    registry=registry,
    namespace=settings.observability.metrics_namespace,
)

verification_checks_total = Counter(
    name="verification_checks_total",
    documentation="Verification checks by recipe and status",
    labelnames=["recipe", "status"],  # pass/fail/skipped
    registry=registry,
    namespace=settings.observability.metrics_namespace,
)


# ============================================================================
# Gauge Metrics - Values that can go up or down
# ============================================================================

searches_in_progress = Gauge(
    name="searches_in_progress",
    documentation="Extremal searches currently running in this process",
    registry=registry,
    namespace=settings.observability.metrics_namespace,
)


__all__ = [
    "containment_nodes_total",
    "containment_queries_total",
    "registry",
    "searches_in_progress",
    "solver_nodes_total",
    "solver_runs_total",
    "verification_checks_total",
]
