"""Exact algebra of the inverse monoid of diagonal segments in a square."""

from .algebra import (
    AmbientError,
    DomainError,
    Element,
    ValidationError,
    domain_of,
    format_element,
    height,
    identity,
    inverse,
    is_idempotent,
    is_point,
    leq_natural,
    make_element,
    multiply,
    power,
    range_of,
    restricted_product,
    zero,
)
from .parse import ParseError, evaluate, parse_element, parse_expression
from .structure import (
    CircleImage,
    GreenRelation,
    Ideal,
    circle_morphism,
    d_class_witness,
    factor_through,
    green_related,
    ideal_contains,
    in_brandt,
    iso_map,
    jth_root,
    nilpotent_index,
    principal_ideal_of,
    sierpinski_element,
)

__version__ = "0.1.0"
