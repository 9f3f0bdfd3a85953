"""Tree classification, predicted values, verification recipes and reports."""

from turanlab.lab.models import AggregateStatus, Check, CheckStatus, SkipReason, VerificationReport
from turanlab.lab.predictions import BlowupKind, Prediction, predicted_value, star_constant
from turanlab.lab.recipes import (
    verify_edge_law,
    verify_figure_claims,
    verify_freeness_sweep,
    verify_path_blowup_claims,
    verify_split_family,
    verify_star_constant,
    verify_tfree,
)
from turanlab.lab.report import emit_report
from turanlab.lab.trees import TreeClassification, TreeVerdict, classify_tree


__all__ = [
    "AggregateStatus",
    "BlowupKind",
    "Check",
    "CheckStatus",
    "Prediction",
    "SkipReason",
    "TreeClassification",
    "TreeVerdict",
    "VerificationReport",
    "classify_tree",
    "emit_report",
    "predicted_value",
    "star_constant",
    "verify_edge_law",
    "verify_figure_claims",
    "verify_freeness_sweep",
    "verify_path_blowup_claims",
    "verify_split_family",
    "verify_star_constant",
    "verify_tfree",
]
