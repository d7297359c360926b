"""
Validators for objects and morphisms of C, A2 and A1.

Each validator returns the list of violations found (empty means valid) and
never raises on bad mathematics. Shape problems are reported first; when a
value has the wrong shape its algebraic conditions are not evaluated.
"""

from itertools import product
from typing import List

from ..linalg import (
    LinearMap,
    Subspace,
    contains,
    identity,
    is_invertible,
    subspace_intersection,
)
from .models import (
    A1Object,
    A2Morphism,
    A2Object,
    CMorphism,
    CObject,
    Violation,
    ViolationKind,
)

SUBSPACE_NAMES = ("a1", "a2", "b1", "b2")
TARGET_NAMES = {"a1": "X1", "a2": "X2", "b1": "Y1", "b2": "Y2"}


def _shape(location: str, f: LinearMap, rows: int, cols: int) -> List[Violation]:
    if f.matrix.shape == (rows, cols):
        return []
    return [
        Violation(
            ViolationKind.SHAPE_MISMATCH,
            location,
            f"expected {rows}x{cols}, got {f.matrix.rows}x{f.matrix.cols}",
        )
    ]


def _c_object_shape(x: CObject) -> List[Violation]:
    violations = []
    for name in SUBSPACE_NAMES:
        ambient = x.subspace(name).ambient_dim
        if ambient != x.ambient_dim:
            violations.append(
                Violation(
                    ViolationKind.SHAPE_MISMATCH,
                    name.upper(),
                    f"lives in Q^{ambient}, object ambient is Q^{x.ambient_dim}",
                )
            )
    return violations


def _a2_object_shape(e: A2Object) -> List[Violation]:
    return (
        _shape("delta_minus", e.delta_minus, e.n_zero, e.n_minus)
        + _shape("gamma_minus", e.gamma_minus, e.n_minus, e.n_zero)
        + _shape("delta_plus", e.delta_plus, e.n_zero, e.n_plus)
        + _shape("gamma_plus", e.gamma_plus, e.n_plus, e.n_zero)
    )


def validate_c_object(x: CObject) -> List[Violation]:
    """Check Ai ⊕ Bj = V for the four pairs (i, j)."""
    violations = _c_object_shape(x)
    if violations:
        return violations

    for i, j in product((1, 2), (1, 2)):
        a: Subspace = x.subspace(f"a{i}")
        b: Subspace = x.subspace(f"b{j}")
        location = f"(A{i}, B{j})"
        overlap = subspace_intersection(a, b)
        if overlap.dim > 0:
            violations.append(
                Violation(
                    ViolationKind.INTERSECTION_NONZERO,
                    location,
                    f"A{i} ∩ B{j} has dimension {overlap.dim}",
                )
            )
        elif a.dim + b.dim != x.ambient_dim:
            violations.append(
                Violation(
                    ViolationKind.DIMENSIONS_SHORT,
                    location,
                    f"dim A{i} + dim B{j} = {a.dim + b.dim} < {x.ambient_dim}",
                )
            )
    return violations


def validate_c_morphism(f: CMorphism) -> List[Violation]:
    """Check both endpoints and the four containments φ(Ai) ⊆ Xi, φ(Bi) ⊆ Yi."""
    violations = [v.prefixed("source") for v in validate_c_object(f.source)]
    violations += [v.prefixed("target") for v in validate_c_object(f.target)]
    violations += _shape("map", f.map, f.target.ambient_dim, f.source.ambient_dim)
    if violations:
        return violations

    for name in SUBSPACE_NAMES:
        image = Subspace.span(f.map.matrix @ f.source.subspace(name).basis)
        if not contains(f.target.subspace(name), image):
            violations.append(
                Violation(
                    ViolationKind.CONTAINMENT_FAILED,
                    name.upper(),
                    f"φ({name.upper()}) ⊄ {TARGET_NAMES[name]}",
                )
            )
    return violations


def validate_a2_object(e: A2Object) -> List[Violation]:
    """Check gamma±∘delta± = 1 and invertibility of gamma∓∘delta±."""
    violations = _a2_object_shape(e)
    if violations:
        return violations

    if e.gamma_plus @ e.delta_plus != identity(e.n_plus):
        violations.append(
            Violation(ViolationKind.NOT_IDENTITY, "gamma_plus∘delta_plus", "expected 1 on E+")
        )
    if e.gamma_minus @ e.delta_minus != identity(e.n_minus):
        violations.append(
            Violation(ViolationKind.NOT_IDENTITY, "gamma_minus∘delta_minus", "expected 1 on E-")
        )
    cross_plus = e.gamma_minus @ e.delta_plus
    if not is_invertible(cross_plus):
        violations.append(
            Violation(
                ViolationKind.NOT_INVERTIBLE,
                "gamma_minus∘delta_plus",
                f"E+ -> E- is {cross_plus}",
            )
        )
    cross_minus = e.gamma_plus @ e.delta_minus
    if not is_invertible(cross_minus):
        violations.append(
            Violation(
                ViolationKind.NOT_INVERTIBLE,
                "gamma_plus∘delta_minus",
                f"E- -> E+ is {cross_minus}",
            )
        )
    return violations


def a2_square_violations(f: A2Morphism) -> List[Violation]:
    """The four commuting squares, assuming shapes are already correct."""
    src, tgt = f.source, f.target
    squares = [
        ("eta_minus∘e_minus = e_zero∘delta_minus",
         tgt.delta_minus @ f.e_minus, f.e_zero @ src.delta_minus),
        ("xi_plus∘e_zero = e_plus∘gamma_plus",
         tgt.gamma_plus @ f.e_zero, f.e_plus @ src.gamma_plus),
        ("xi_minus∘e_zero = e_minus∘gamma_minus",
         tgt.gamma_minus @ f.e_zero, f.e_minus @ src.gamma_minus),
        ("eta_plus∘e_plus = e_zero∘delta_plus",
         tgt.delta_plus @ f.e_plus, f.e_zero @ src.delta_plus),
    ]
    return [
        Violation(ViolationKind.SQUARE_NOT_COMMUTING, name, f"{lhs} != {rhs}")
        for name, lhs, rhs in squares
        if lhs != rhs
    ]


def validate_a2_morphism(f: A2Morphism) -> List[Violation]:
    violations = [v.prefixed("source") for v in validate_a2_object(f.source)]
    violations += [v.prefixed("target") for v in validate_a2_object(f.target)]
    violations += _shape("e_minus", f.e_minus, f.target.n_minus, f.source.n_minus)
    violations += _shape("e_zero", f.e_zero, f.target.n_zero, f.source.n_zero)
    violations += _shape("e_plus", f.e_plus, f.target.n_plus, f.source.n_plus)
    if violations:
        return violations
    return a2_square_violations(f)


def validate_a1_object(a: A1Object) -> List[Violation]:
    """Check that 1 - u∘v is invertible on ℚᵐ."""
    violations = _shape("u", a.u, a.m, a.n) + _shape("v", a.v, a.n, a.m)
    if violations:
        return violations
    defect = identity(a.m) - a.u @ a.v
    if not is_invertible(defect):
        violations.append(
            Violation(ViolationKind.NOT_INVERTIBLE, "1 - u∘v", f"singular: {defect}")
        )
    return violations


def a1_symmetric_holds(a: A1Object) -> bool:
    """Whether 1 - v∘u is invertible on ℚⁿ; agrees with the A1 condition."""
    return is_invertible(identity(a.n) - a.v @ a.u)
