"""Categories C, A2 and A1 as concrete data."""

from .constructions import (
    compose_a2,
    compose_c,
    conjugate_a2,
    direct_sum_a2,
    direct_sum_c,
    identity_a2,
    identity_c,
    scalar_a2,
    scalar_c,
    zero_a2,
    zero_c,
)
from .models import (
    A1Object,
    A2Morphism,
    A2Object,
    CMorphism,
    CObject,
    DirectSum,
    Violation,
    ViolationKind,
)
from .validators import (
    a1_symmetric_holds,
    validate_a1_object,
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
)

__all__ = [
    "A1Object",
    "A2Morphism",
    "A2Object",
    "CMorphism",
    "CObject",
    "DirectSum",
    "Violation",
    "ViolationKind",
    "validate_a1_object",
    "validate_a2_morphism",
    "validate_a2_object",
    "validate_c_morphism",
    "validate_c_object",
    "a1_symmetric_holds",
    "compose_a2",
    "compose_c",
    "conjugate_a2",
    "direct_sum_a2",
    "direct_sum_c",
    "identity_a2",
    "identity_c",
    "scalar_a2",
    "scalar_c",
    "zero_a2",
    "zero_c",
]
