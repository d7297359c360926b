"""Deterministic seeded generation of valid category data."""

from .config import GenConfig
from .factory import (
    ObjectFactory,
    c_object_from_graphs,
    random_a1_object,
    random_a2_morphism,
    random_a2_object,
    random_c_morphism,
    random_c_object,
    random_invertible,
)
from .rng import SplitMix64

__all__ = [
    "GenConfig",
    "SplitMix64",
    "ObjectFactory",
    "c_object_from_graphs",
    "random_invertible",
    "random_c_object",
    "random_a2_object",
    "random_a1_object",
    "random_c_morphism",
    "random_a2_morphism",
]
