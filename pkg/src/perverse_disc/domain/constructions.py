"""
Category structure on C and A2: identities, composition, direct sums and a
few standard morphisms used to build test data.
"""

from fractions import Fraction
from typing import Tuple

from ..errors import DimensionMismatchError, ObjectMismatchError
from ..linalg import LinearMap, Matrix, Subspace, identity, inverse, scale, zero_map
from .models import A2Morphism, A2Object, CMorphism, CObject, DirectSum
from .validators import SUBSPACE_NAMES, validate_a2_morphism, validate_c_morphism


def identity_c(x: CObject) -> CMorphism:
    return CMorphism(x, x, identity(x.ambient_dim))


def identity_a2(e: A2Object) -> A2Morphism:
    return A2Morphism(e, e, identity(e.n_minus), identity(e.n_zero), identity(e.n_plus))


def compose_c(g: CMorphism, f: CMorphism) -> CMorphism:
    """g∘f; the target of f must equal the source of g."""
    if f.target != g.source:
        raise ObjectMismatchError("cannot compose: target of f is not the source of g")
    composite = CMorphism(f.source, g.target, g.map @ f.map)
    assert not validate_c_morphism(composite) or validate_c_morphism(f) or validate_c_morphism(g)
    return composite


def compose_a2(g: A2Morphism, f: A2Morphism) -> A2Morphism:
    if f.target != g.source:
        raise ObjectMismatchError("cannot compose: target of f is not the source of g")
    composite = A2Morphism(
        f.source,
        g.target,
        g.e_minus @ f.e_minus,
        g.e_zero @ f.e_zero,
        g.e_plus @ f.e_plus,
    )
    # composites of valid morphisms are valid
    assert (
        not validate_a2_morphism(composite)
        or validate_a2_morphism(f)
        or validate_a2_morphism(g)
    )
    return composite


def scalar_c(x: CObject, factor: Fraction) -> CMorphism:
    return CMorphism(x, x, scale(identity(x.ambient_dim), factor))


def scalar_a2(e: A2Object, factor: Fraction) -> A2Morphism:
    return A2Morphism(
        e,
        e,
        scale(identity(e.n_minus), factor),
        scale(identity(e.n_zero), factor),
        scale(identity(e.n_plus), factor),
    )


def zero_c(x: CObject, y: CObject) -> CMorphism:
    return CMorphism(x, y, zero_map(x.ambient_dim, y.ambient_dim))


def zero_a2(e: A2Object, f: A2Object) -> A2Morphism:
    return A2Morphism(
        e,
        f,
        zero_map(e.n_minus, f.n_minus),
        zero_map(e.n_zero, f.n_zero),
        zero_map(e.n_plus, f.n_plus),
    )


def _block_maps(n1: int, n2: int) -> Tuple[LinearMap, LinearMap, LinearMap, LinearMap]:
    """Inclusions ℚ^n1, ℚ^n2 → ℚ^(n1+n2) and the matching projections."""
    first = Matrix.identity(n1).vstack(Matrix.zeros(n2, n1))
    second = Matrix.zeros(n1, n2).vstack(Matrix.identity(n2))
    return (
        LinearMap(first),
        LinearMap(second),
        LinearMap(first.transpose()),
        LinearMap(second.transpose()),
    )


def _block(f: LinearMap, g: LinearMap) -> LinearMap:
    return LinearMap(Matrix.block_diagonal(f.matrix, g.matrix))


def direct_sum_c(x: CObject, y: CObject) -> DirectSum[CObject, CMorphism]:
    subspaces = {
        name: Subspace.span(
            Matrix.block_diagonal(x.subspace(name).basis, y.subspace(name).basis)
        )
        for name in SUBSPACE_NAMES
    }
    total = CObject(x.ambient_dim + y.ambient_dim, **subspaces)
    inc_x, inc_y, proj_x, proj_y = _block_maps(x.ambient_dim, y.ambient_dim)
    return DirectSum(
        total=total,
        include_first=CMorphism(x, total, inc_x),
        include_second=CMorphism(y, total, inc_y),
        project_first=CMorphism(total, x, proj_x),
        project_second=CMorphism(total, y, proj_y),
    )


def direct_sum_a2(e: A2Object, f: A2Object) -> DirectSum[A2Object, A2Morphism]:
    total = A2Object(
        n_minus=e.n_minus + f.n_minus,
        n_zero=e.n_zero + f.n_zero,
        n_plus=e.n_plus + f.n_plus,
        delta_minus=_block(e.delta_minus, f.delta_minus),
        gamma_minus=_block(e.gamma_minus, f.gamma_minus),
        delta_plus=_block(e.delta_plus, f.delta_plus),
        gamma_plus=_block(e.gamma_plus, f.gamma_plus),
    )
    minus = _block_maps(e.n_minus, f.n_minus)
    zero = _block_maps(e.n_zero, f.n_zero)
    plus = _block_maps(e.n_plus, f.n_plus)
    return DirectSum(
        total=total,
        include_first=A2Morphism(e, total, minus[0], zero[0], plus[0]),
        include_second=A2Morphism(f, total, minus[1], zero[1], plus[1]),
        project_first=A2Morphism(total, e, minus[2], zero[2], plus[2]),
        project_second=A2Morphism(total, f, minus[3], zero[3], plus[3]),
    )


def conjugate_a2(
    e: A2Object, q_minus: LinearMap, q_zero: LinearMap, q_plus: LinearMap
) -> A2Morphism:
    """The isomorphism (Q-, Q0, Q+) from e onto its change-of-basis conjugate.

    The conjugate has delta± = Q0∘delta±∘Q±⁻¹ and gamma± = Q±∘gamma±∘Q0⁻¹.
    Raises NotInvertibleError if any Q is singular.
    """
    expected = (e.n_minus, e.n_zero, e.n_plus)
    if (q_minus.domain_dim, q_zero.domain_dim, q_plus.domain_dim) != expected:
        raise DimensionMismatchError("conjugators must act on E-, E0 and E+")
    q_minus_inv, q_zero_inv, q_plus_inv = inverse(q_minus), inverse(q_zero), inverse(q_plus)
    conjugate = A2Object(
        n_minus=e.n_minus,
        n_zero=e.n_zero,
        n_plus=e.n_plus,
        delta_minus=q_zero @ e.delta_minus @ q_minus_inv,
        gamma_minus=q_minus @ e.gamma_minus @ q_zero_inv,
        delta_plus=q_zero @ e.delta_plus @ q_plus_inv,
        gamma_plus=q_plus @ e.gamma_plus @ q_zero_inv,
    )
    return A2Morphism(e, conjugate, q_minus, q_zero, q_plus)
