"""Shared fixtures for the turanlab test suite."""

from collections.abc import Iterator
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from typer.testing import CliRunner

from turanlab.containment.cache import query_cache
from turanlab.graph.family import GraphFamily
from turanlab.graph.named import complete, matching, star


# Parent profile for the large randomized runs in the slow suite.
settings.register_profile(
    "acceptance",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)


@pytest.fixture(autouse=True)
def fresh_query_cache() -> Iterator[None]:
    """Containment answers must not leak between tests."""
    query_cache.clear()
    yield
    query_cache.clear()


@pytest.fixture
def cache_file(tmp_path: Path) -> Path:
    return tmp_path / "results.jsonl"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def triangle_family() -> GraphFamily:
    return GraphFamily([complete(3)])


@pytest.fixture
def star_matching_family() -> GraphFamily:
    """{S_2, M_2}: any two edges form a cherry or a matching."""
    return GraphFamily([star(2), matching(2)])
