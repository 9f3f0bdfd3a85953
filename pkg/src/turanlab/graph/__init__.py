"""Graph representation, interchange, canonical forms and invariants."""

from turanlab.graph.canonical import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_key,
    canonical_labeling,
)
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.graph.graph6 import graph6_decode, graph6_encode, sparse6_decode, sparse6_encode
from turanlab.graph.invariants import (
    GraphInvariants,
    chromatic_number,
    independence_number,
    invariants,
    matching_number,
)
from turanlab.graph.named import (
    complete,
    complete_multipartite,
    cycle,
    empty,
    matching,
    path,
    star,
    subdivided_star,
)
from turanlab.graph.operations import disjoint_union, join, k_copies


__all__ = [
    "CanonicalForm",
    "Graph",
    "GraphFamily",
    "GraphInvariants",
    "are_isomorphic",
    "canonical_form",
    "canonical_key",
    "canonical_labeling",
    "chromatic_number",
    "complete",
    "complete_multipartite",
    "cycle",
    "disjoint_union",
    "empty",
    "graph6_decode",
    "graph6_encode",
    "independence_number",
    "invariants",
    "join",
    "k_copies",
    "matching",
    "matching_number",
    "path",
    "sparse6_decode",
    "sparse6_encode",
    "star",
    "subdivided_star",
]
