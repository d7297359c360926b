"""
perverse-disc

Exact linear algebra for the three descriptions of perverse sheaves on a
disc: the category C of four subspaces, the triple category A2 and the pair
category A1, together with the functors S: C → A2 and T: A2 → C.

Key Features:
- Exact rational arithmetic; every comparison is equality of canonical data
- Validators that report each failed condition as a value
- Functors S and T, the natural isomorphism M: Id → ST and its inverse
- Certificates for the well-definedness lemmas and the equivalence theorem
- Deterministic seeded generation of valid objects and morphisms
- JSON documents and a batch CLI with a verification suite

Example Usage:
    from perverse_disc import GenConfig, certify_ts_identity, random_c_object
    from perverse_disc import s_on_object, t_on_object

    # Draw a valid C object
    x = random_c_object(GenConfig(seed=42))

    # Send it to A2 and back
    e = s_on_object(x)
    assert t_on_object(e) == x

    # Certify the round trip
    cert = certify_ts_identity(x)
    print(cert.report_lines())
"""

__version__ = "0.1.0"
__author__ = "perverse-disc developers"

from .domain import (
    A1Object,
    A2Morphism,
    A2Object,
    CMorphism,
    CObject,
    Violation,
    ViolationKind,
    compose_a2,
    compose_c,
    direct_sum_a2,
    direct_sum_c,
    identity_a2,
    identity_c,
    validate_a1_object,
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
)
from .errors import PerverseDiscError
from .functors import (
    NaturalityCertificate,
    certify_functoriality,
    certify_naturality,
    certify_s_well_defined,
    certify_st_isomorphism,
    certify_t_well_defined,
    certify_ts_identity,
    nat_iso_m,
    nat_iso_m_inv,
    s_on_morphism,
    s_on_object,
    t_on_morphism,
    t_on_object,
)
from .generation import (
    GenConfig,
    ObjectFactory,
    random_a2_morphism,
    random_a2_object,
    random_c_morphism,
    random_c_object,
    random_invertible,
)
from .io import Document, DocumentKind, parse, serialize
from .linalg import LinearMap, Matrix, Subspace

__all__ = [
    # Linear algebra
    "Matrix",
    "LinearMap",
    "Subspace",

    # Objects and morphisms
    "CObject",
    "CMorphism",
    "A2Object",
    "A2Morphism",
    "A1Object",
    "Violation",
    "ViolationKind",

    # Category structure
    "identity_c",
    "identity_a2",
    "compose_c",
    "compose_a2",
    "direct_sum_c",
    "direct_sum_a2",

    # Validators
    "validate_c_object",
    "validate_c_morphism",
    "validate_a2_object",
    "validate_a2_morphism",
    "validate_a1_object",

    # Functors and certificates
    "s_on_object",
    "s_on_morphism",
    "t_on_object",
    "t_on_morphism",
    "nat_iso_m",
    "nat_iso_m_inv",
    "NaturalityCertificate",
    "certify_ts_identity",
    "certify_st_isomorphism",
    "certify_naturality",
    "certify_functoriality",
    "certify_s_well_defined",
    "certify_t_well_defined",

    # Generation
    "GenConfig",
    "ObjectFactory",
    "random_invertible",
    "random_c_object",
    "random_a2_object",
    "random_c_morphism",
    "random_a2_morphism",

    # Documents
    "Document",
    "DocumentKind",
    "parse",
    "serialize",

    # Errors
    "PerverseDiscError",
]
