"""Named constructions, blow-ups, vertex splits and the construction-spec grammar."""

from turanlab.constructions.builders import (
    Construction,
    h_edge_count,
    h_graph,
    h_prime,
    h_star,
    h_star_edge_count,
    q_graph,
    turan,
    turan_classes,
    turan_edge_count,
)
from turanlab.constructions.spec import ConstructionSpec, build, build_graph, parse_spec
from turanlab.constructions.transforms import blow_up, split_family, vertex_split


__all__ = [
    "Construction",
    "ConstructionSpec",
    "blow_up",
    "build",
    "build_graph",
    "h_edge_count",
    "h_graph",
    "h_prime",
    "h_star",
    "h_star_edge_count",
    "parse_spec",
    "q_graph",
    "split_family",
    "turan",
    "turan_classes",
    "turan_edge_count",
    "vertex_split",
]
