"""
The functors S: C → A2 and T: A2 → C.

S sends (V, A1, A2, B1, B2) to A1 ⇄ V ⇄ A2, where the deltas are the subspace
inclusions and the gammas are the projections along B1 and B2. The spaces
E- and E+ are coordinate spaces whose standard basis is the canonical basis of
A1 and A2, so delta- is literally the basis matrix of A1. T sends a triple to
(E0, im delta-, im delta+, ker gamma-, ker gamma+), which makes T∘S the
identity on the nose.
"""

from ..domain import (
    A2Morphism,
    A2Object,
    CMorphism,
    CObject,
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
)
from ..errors import InvalidObjectError
from ..linalg import coordinates_in, image_basis, kernel_basis, projection_along


def s_on_object(x: CObject) -> A2Object:
    violations = validate_c_object(x)
    if violations:
        raise InvalidObjectError("S needs a valid C object", violations)
    return A2Object(
        n_minus=x.a1.dim,
        n_zero=x.ambient_dim,
        n_plus=x.a2.dim,
        delta_minus=x.a1.inclusion(),
        gamma_minus=projection_along(x.a1, x.b1),
        delta_plus=x.a2.inclusion(),
        gamma_plus=projection_along(x.a2, x.b2),
    )


def s_on_morphism(f: CMorphism) -> A2Morphism:
    """S(φ) = (φ∘i1, φ, φ∘i2), the outer components read in X1, X2 coordinates."""
    violations = validate_c_morphism(f)
    if violations:
        raise InvalidObjectError("S needs a valid C morphism", violations)
    return A2Morphism(
        source=s_on_object(f.source),
        target=s_on_object(f.target),
        e_minus=coordinates_in(f.target.a1, f.map @ f.source.a1.inclusion()),
        e_zero=f.map,
        e_plus=coordinates_in(f.target.a2, f.map @ f.source.a2.inclusion()),
    )


def t_on_object(e: A2Object) -> CObject:
    violations = validate_a2_object(e)
    if violations:
        raise InvalidObjectError("T needs a valid A2 object", violations)
    return CObject(
        ambient_dim=e.n_zero,
        a1=image_basis(e.delta_minus),
        a2=image_basis(e.delta_plus),
        b1=kernel_basis(e.gamma_minus),
        b2=kernel_basis(e.gamma_plus),
    )


def t_on_morphism(f: A2Morphism) -> CMorphism:
    """T(e-, e0, e+) = e0."""
    violations = validate_a2_morphism(f)
    if violations:
        raise InvalidObjectError("T needs a valid A2 morphism", violations)
    return CMorphism(t_on_object(f.source), t_on_object(f.target), f.e_zero)
