"""Exact extremal numbers ex(n, F) at desk scale."""

from turanlab.solver.branch_bound import ex_branch_bound, greedy_lower_bound
from turanlab.solver.cache import ResultCache, cache_get, cache_put, make_cache_key
from turanlab.solver.enumerate import ex_enumerate
from turanlab.solver.extremal import (
    SolverCrossCheck,
    cross_check,
    ex,
    is_edge_maximal,
    lower_bound_from_construction,
)
from turanlab.solver.models import (
    CacheKey,
    CacheRecord,
    ExtremalResult,
    SearchBudget,
    SearchStats,
    SolverMode,
)


__all__ = [
    "CacheKey",
    "CacheRecord",
    "ExtremalResult",
    "ResultCache",
    "SearchBudget",
    "SearchStats",
    "SolverCrossCheck",
    "SolverMode",
    "cache_get",
    "cache_put",
    "cross_check",
    "ex",
    "ex_branch_bound",
    "ex_enumerate",
    "greedy_lower_bound",
    "is_edge_maximal",
    "lower_bound_from_construction",
    "make_cache_key",
]
