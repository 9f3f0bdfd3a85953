"""Decomposition families and the blow-up fast path."""

from turanlab.decomposition.family import (
    BlowupCrossCheck,
    DecompositionQuery,
    DecompositionResult,
    cross_check_blowup,
    decomposition_family_blowup,
    decomposition_family_general,
    family_threshold,
    is_decomposition_member,
)


__all__ = [
    "BlowupCrossCheck",
    "DecompositionQuery",
    "DecompositionResult",
    "cross_check_blowup",
    "decomposition_family_blowup",
    "decomposition_family_general",
    "family_threshold",
    "is_decomposition_member",
]
