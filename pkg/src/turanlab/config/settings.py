"""
Settings tree for turanlab.

Every search in the toolkit is exact; the knobs below only bound how far a
search may go before it reports an explicit cap/budget error or an
"incomplete" result.
"""

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


# ======================================
# ENUMS - Configuration Options
# ======================================


class Environment(str, Enum):
    """Run environment"""

    DEV = "development"
    CI = "ci"
    PROD = "production"


class LogLevel(str, Enum):
    """Logging Levels"""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class OutputFormat(str, Enum):
    """Report and result serialisations."""

    JSON = "json"
    TSV = "tsv"
    HUMAN = "human"
    G6 = "g6"


# ============================================================================
# SETTINGS MODELS - Organized by domain
# ============================================================================


class GraphSettings(BaseSettings):
    """Graph representation limits and exact-invariant caps."""

    model_config = SettingsConfigDict(
        env_prefix="GRAPH_",
        case_sensitive=False,
    )

    max_vertices: int = Field(
        default=1024,
        description="Largest vertex count a Graph may have",
        ge=1,
        le=1024,
    )
    invariant_cap: int = Field(
        default=64,
        description="Largest order for exact chromatic/independence numbers",
        ge=1,
    )
    split_cap: int = Field(
        default=12,
        description="Largest base order accepted by split_family (2^n subsets)",
        ge=1,
        le=20,
    )


class ContainmentSettings(BaseSettings):
    """Subgraph containment search configuration."""

    model_config = SettingsConfigDict(
        env_prefix="CONTAIN_",
        case_sensitive=False,
    )

    max_nodes: int = Field(
        default=100_000_000,
        description="Search-tree node budget per containment query",
        ge=1,
    )
    query_cache_enabled: bool = Field(
        default=True,
        description="Memoise containment answers within the process",
    )
    query_cache_size: int = Field(
        default=4096,
        description="Max cached containment answers",
        ge=0,
    )


class DecompositionSettings(BaseSettings):
    """Decomposition family computation limits."""

    model_config = SettingsConfigDict(
        env_prefix="DECOMP_",
        case_sensitive=False,
    )

    candidate_vertex_cap: int = Field(
        default=14,
        description="Largest forbidden-graph order for candidate enumeration",
        ge=1,
        le=20,
    )
    exhaustive_edge_cap: int = Field(
        default=16,
        description="Largest edge count for the exhaustive edge-subset candidate sweep",
        ge=1,
        le=24,
    )


class SolverSettings(BaseSettings):
    """Exact extremal-number search configuration."""

    model_config = SettingsConfigDict(
        env_prefix="SOLVER_",
        case_sensitive=False,
    )

    max_nodes: int = Field(
        default=100_000_000,
        description="Search-node budget before a result is marked incomplete",
        ge=1,
    )
    max_seconds: float | None = Field(
        default=None,
        description="Wall-clock budget in seconds (None = unlimited)",
        gt=0,
    )
    workers: int = Field(
        default=1,
        description="Worker processes for subtree fan-out",
        ge=1,
    )
    witness_cap: int = Field(
        default=64,
        description="Max extremal witnesses kept before the overflow flag is set",
        ge=1,
    )
    memo_rows: int = Field(
        default=8,
        description="Branch-and-bound rows for which partial states are canonically memoised",
        ge=0,
    )
    cache_path: Path | None = Field(
        default=None,
        description="JSON-lines result cache (None = disabled)",
    )

    @field_validator("cache_path", mode="before")
    @classmethod
    def normalize_cache_path(cls, value: str | Path | None) -> Path | None:
        """Treat blank cache paths as unset and expand ``~``."""
        if value is None:
            return None
        cleaned = str(value).strip()
        if not cleaned:
            return None
        return Path(cleaned).expanduser()


class ObservabilitySettings(BaseSettings):
    """Logging and metrics configuration."""

    model_config = SettingsConfigDict(
        env_prefix="OBS_",
        case_sensitive=False,
    )

    log_level: LogLevel = Field(
        default=LogLevel.WARNING,
        description="Logging verbosity level",
    )
    log_format: str = Field(
        default="text",
        description="Log format: 'json' or 'text'",
    )

    # Prometheus metrics
    prometheus_enabled: bool = Field(
        default=False,
        description="Register metrics in the default Prometheus registry",
    )
    metrics_namespace: str = Field(
        default="turanlab",
        description="Prometheus metric namespace prefix",
    )


# ============================================================================
# MAIN SETTINGS - Root configuration
# ============================================================================


class Settings(BaseSettings):
    """
    Central configuration for turanlab.

    All settings cascade from environment variables, then .env file,
    then Python defaults with runtime overrides possible (CLI flags).
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="allow",
    )

    # ========================================================================
    # Application Metadata
    # ========================================================================

    app_name: str = Field(
        default="turanlab",
        description="Application name",
    )
    app_version: str = Field(
        default="0.1.0",
        description="Application version (stamped into cache records)",
    )
    environment: Environment = Field(
        default=Environment.DEV,
        description="Run environment",
    )
    debug: bool = Field(
        default=False,
        description="Enable debug mode",
    )

    # ========================================================================
    # Nested Settings (Domain-specific configs)
    # ========================================================================

    graph: GraphSettings = Field(
        default_factory=GraphSettings,
        description="Graph limits",
    )
    containment: ContainmentSettings = Field(
        default_factory=ContainmentSettings,
        description="Containment search configuration",
    )
    decomposition: DecompositionSettings = Field(
        default_factory=DecompositionSettings,
        description="Decomposition family limits",
    )
    solver: SolverSettings = Field(
        default_factory=SolverSettings,
        description="Extremal solver configuration",
    )
    observability: ObservabilitySettings = Field(
        default_factory=ObservabilitySettings,
        description="Observability (logging, metrics)",
    )

    # ========================================================================
    # Computed Properties
    # ========================================================================

    @property
    def is_production(self) -> bool:
        """Check if running in production."""
        return self.environment == Environment.PROD

    # ========================================================================
    # Validators - Custom validation logic
    # ========================================================================

    @field_validator("environment", mode="before")
    @classmethod
    def validate_environment(cls, v: str | Environment) -> Environment:
        """Validate and normalize environment value."""
        if isinstance(v, Environment):
            return v
        return Environment(v.lower())


# ============================================================================
# Global Settings Instance
# ============================================================================

# Load settings on module import
settings = Settings()


if __name__ == "__main__":
    import json
    import sys

    config_dict: dict[str, Any] = settings.model_dump()
    sys.stdout.write(json.dumps(config_dict, indent=2, default=str) + "\n")
