"""The equivalence C ≃ A2: functors S and T, the natural isomorphism M, certificates."""

from .certification import (
    NaturalityCertificate,
    certify_functoriality,
    certify_naturality,
    certify_s_well_defined,
    certify_st_isomorphism,
    certify_t_well_defined,
    certify_ts_identity,
)
from .equivalence import s_on_morphism, s_on_object, t_on_morphism, t_on_object
from .natural import nat_iso_m, nat_iso_m_inv, round_trip_object

__all__ = [
    "s_on_object",
    "s_on_morphism",
    "t_on_object",
    "t_on_morphism",
    "nat_iso_m",
    "nat_iso_m_inv",
    "round_trip_object",
    "NaturalityCertificate",
    "certify_ts_identity",
    "certify_st_isomorphism",
    "certify_naturality",
    "certify_functoriality",
    "certify_s_well_defined",
    "certify_t_well_defined",
]
