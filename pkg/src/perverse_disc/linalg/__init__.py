"""Exact linear algebra over ℚ."""

from .maps import (
    LinearMap,
    add,
    compose,
    determinant,
    identity,
    inverse,
    is_invertible,
    rank,
    scale,
    sub,
    zero_map,
)
from .matrix import Matrix, format_rational, parse_rational, rcef, rref, solve
from .subspace import (
    Subspace,
    contains,
    coordinates_in,
    image_basis,
    is_direct_sum,
    kernel_basis,
    projection_along,
    subspace_intersection,
    subspace_sum,
)

__all__ = [
    "Matrix",
    "LinearMap",
    "Subspace",
    "parse_rational",
    "format_rational",
    "rref",
    "rcef",
    "solve",
    "identity",
    "zero_map",
    "compose",
    "add",
    "sub",
    "scale",
    "rank",
    "determinant",
    "is_invertible",
    "inverse",
    "kernel_basis",
    "image_basis",
    "subspace_sum",
    "subspace_intersection",
    "is_direct_sum",
    "projection_along",
    "contains",
    "coordinates_in",
]
