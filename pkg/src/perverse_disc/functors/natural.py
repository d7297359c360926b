"""
The natural isomorphism M: Id → ST and its inverse.

ST(E) is E0 with E- and E+ replaced by the images of delta- and delta+. M has
components (delta-, 1, delta+) read in the image coordinates; its inverse has
components (gamma-, 1, gamma+) restricted to those images.
"""

from ..domain import A2Morphism, A2Object, validate_a2_object
from ..errors import InvalidObjectError
from ..linalg import coordinates_in, identity
from .equivalence import s_on_object, t_on_object


def round_trip_object(e: A2Object) -> A2Object:
    """ST(e), computed by applying T and then S."""
    return s_on_object(t_on_object(e))


def nat_iso_m(e: A2Object) -> A2Morphism:
    """M(e): e → ST(e)."""
    violations = validate_a2_object(e)
    if violations:
        raise InvalidObjectError("M needs a valid A2 object", violations)
    te = t_on_object(e)
    return A2Morphism(
        source=e,
        target=s_on_object(te),
        e_minus=coordinates_in(te.a1, e.delta_minus),
        e_zero=identity(e.n_zero),
        e_plus=coordinates_in(te.a2, e.delta_plus),
    )


def nat_iso_m_inv(e: A2Object) -> A2Morphism:
    """M(e)⁻¹: ST(e) → e."""
    violations = validate_a2_object(e)
    if violations:
        raise InvalidObjectError("M⁻¹ needs a valid A2 object", violations)
    st = round_trip_object(e)
    return A2Morphism(
        source=st,
        target=e,
        e_minus=e.gamma_minus @ st.delta_minus,
        e_zero=identity(e.n_zero),
        e_plus=e.gamma_plus @ st.delta_plus,
    )
