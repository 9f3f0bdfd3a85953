"""Subgraph containment: plain hosts, product hosts, family freeness."""

from turanlab.containment.freeness import FreenessResult, is_family_free
from turanlab.containment.product import ProductHostSpec, contains_in_product, product_host
from turanlab.containment.search import (
    ContainmentWitness,
    contains,
    contains_through_edge,
    validate_witness,
)


__all__ = [
    "ContainmentWitness",
    "FreenessResult",
    "ProductHostSpec",
    "contains",
    "contains_in_product",
    "contains_through_edge",
    "is_family_free",
    "product_host",
    "validate_witness",
]
