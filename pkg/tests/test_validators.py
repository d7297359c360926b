"""Tests for the C, A2 and A1 validators."""

from fractions import Fraction
from itertools import permutations

from hypothesis import given
from hypothesis import strategies as st

from perverse_disc.domain import (
    A1Object,
    A2Morphism,
    A2Object,
    CMorphism,
    CObject,
    ViolationKind,
    a1_symmetric_holds,
    identity_a2,
    identity_c,
    scalar_c,
    validate_a1_object,
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
)
from perverse_disc.linalg import LinearMap, Matrix, Subspace, identity, zero_map

from .helpers import line


def kinds_at(violations):
    return {(v.kind, v.location) for v in violations}


def test_q2_object_is_valid(q2_object):
    assert validate_c_object(q2_object) == []


def test_zero_object_is_valid(zero_object):
    assert validate_c_object(zero_object) == []


def test_overlapping_pair_is_reported():
    """A1 = B1 = span(1,0) only breaks the (A1, B1) decomposition."""
    bad = CObject(2, line(1, 0), line(1, 1), line(1, 0), line(1, -1))
    assert kinds_at(validate_c_object(bad)) == {
        (ViolationKind.INTERSECTION_NONZERO, "(A1, B1)"),
    }


def test_short_dimensions_are_reported():
    bad = CObject(2, Subspace.zero(2), line(1, 1), line(0, 1), line(1, -1))
    assert kinds_at(validate_c_object(bad)) == {
        (ViolationKind.DIMENSIONS_SHORT, "(A1, B1)"),
        (ViolationKind.DIMENSIONS_SHORT, "(A1, B2)"),
    }


def test_ambient_mismatch_is_a_shape_violation():
    bad = CObject(2, line(1, 0, 0), line(1, 1), line(0, 1), line(1, -1))
    violations = validate_c_object(bad)
    assert [(v.kind, v.location) for v in violations] == [(ViolationKind.SHAPE_MISMATCH, "A1")]


def test_identity_and_scalars_are_c_morphisms(q2_object):
    assert validate_c_morphism(identity_c(q2_object)) == []
    assert validate_c_morphism(scalar_c(q2_object, Fraction(3))) == []
    assert validate_c_morphism(CMorphism(q2_object, q2_object, zero_map(2, 2))) == []


def test_rotation_breaks_every_containment(q2_object):
    rotation = CMorphism(q2_object, q2_object, LinearMap.of([[0, -1], [1, 0]]))
    assert kinds_at(validate_c_morphism(rotation)) == {
        (ViolationKind.CONTAINMENT_FAILED, name) for name in ("A1", "A2", "B1", "B2")
    }


def test_morphism_reports_invalid_endpoints(q2_object):
    bad = CObject(2, line(1, 0), line(1, 1), line(1, 0), line(1, -1))
    violations = validate_c_morphism(CMorphism(bad, q2_object, identity(2)))
    assert [v.location for v in violations] == ["source.(A1, B1)"]


def test_morphism_map_shape(q2_object):
    violations = validate_c_morphism(CMorphism(q2_object, q2_object, identity(3)))
    assert kinds_at(violations) == {(ViolationKind.SHAPE_MISMATCH, "map")}


def test_q2_triple_is_valid(q2_triple, unit_triple):
    assert validate_a2_object(q2_triple) == []
    assert validate_a2_object(unit_triple) == []


def test_degenerate_cross_composite(q2_triple):
    bad = A2Object(
        1, 2, 1,
        q2_triple.delta_minus,
        q2_triple.gamma_minus,
        q2_triple.delta_plus,
        LinearMap.of([[0, 1]]),
    )
    assert kinds_at(validate_a2_object(bad)) == {
        (ViolationKind.NOT_INVERTIBLE, "gamma_plus∘delta_minus"),
    }


def test_retraction_failure():
    one = LinearMap.of([[1]])
    bad = A2Object(1, 1, 1, one, LinearMap.of([[2]]), one, one)
    assert kinds_at(validate_a2_object(bad)) == {
        (ViolationKind.NOT_IDENTITY, "gamma_minus∘delta_minus"),
    }


def test_a2_shape_mismatch_stops_algebra(q2_triple):
    bad = A2Object(
        1, 2, 1,
        LinearMap.of([[1]]),
        q2_triple.gamma_minus,
        q2_triple.delta_plus,
        q2_triple.gamma_plus,
    )
    violations = validate_a2_object(bad)
    assert [(v.kind, v.location) for v in violations] == [
        (ViolationKind.SHAPE_MISMATCH, "delta_minus")
    ]


def test_identity_is_an_a2_morphism(q2_triple):
    assert validate_a2_morphism(identity_a2(q2_triple)) == []


def test_non_commuting_squares(q2_triple):
    f = A2Morphism(q2_triple, q2_triple, zero_map(1, 1), identity(2), identity(1))
    assert kinds_at(validate_a2_morphism(f)) == {
        (ViolationKind.SQUARE_NOT_COMMUTING, "eta_minus∘e_minus = e_zero∘delta_minus"),
        (ViolationKind.SQUARE_NOT_COMMUTING, "xi_minus∘e_zero = e_minus∘gamma_minus"),
    }


def test_a1_examples():
    half = LinearMap.of([["1/2", 0], [0, "1/2"]])
    assert validate_a1_object(A1Object(2, 2, half, half)) == []
    one = LinearMap.of([[1]])
    assert kinds_at(validate_a1_object(A1Object(1, 1, one, one))) == {
        (ViolationKind.NOT_INVERTIBLE, "1 - u∘v"),
    }
    empty = A1Object(0, 0, zero_map(0, 0), zero_map(0, 0))
    assert validate_a1_object(empty) == []


def test_a1_shape_mismatch():
    violations = validate_a1_object(A1Object(1, 2, identity(2), identity(2)))
    assert {v.location for v in violations} == {"u", "v"}


def test_a1_rectangular_singular_both_ways():
    u = LinearMap.of([[1, 0]])
    v = LinearMap.of([[1], [0]])
    a = A1Object(1, 2, u, v)
    assert validate_a1_object(a) != []
    assert not a1_symmetric_holds(a)


def _leibniz(m: Matrix) -> Fraction:
    """Determinant as a signed sum over permutations."""
    total = Fraction(0)
    for perm in permutations(range(m.rows)):
        sign = 1
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Fraction(sign)
        for row, col in enumerate(perm):
            term *= m.entries[row][col]
        total += term
    return total


def a1_objects(max_dim: int = 3):
    def build(m: int, n: int):
        entries = st.integers(-2, 2)
        return st.tuples(
            st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m),
            st.lists(st.lists(entries, min_size=m, max_size=m), min_size=n, max_size=n),
        ).map(
            lambda uv: A1Object(
                m, n, LinearMap(Matrix.of(uv[0], m, n)), LinearMap(Matrix.of(uv[1], n, m))
            )
        )

    return st.tuples(st.integers(0, max_dim), st.integers(0, max_dim)).flatmap(
        lambda dims: build(*dims)
    )


@given(a1_objects())
def test_a1_verdict_matches_leibniz_determinant(a):
    defect = (identity(a.m) - a.u @ a.v).matrix
    assert (validate_a1_object(a) == []) == (_leibniz(defect) != 0)


@given(a1_objects())
def test_a1_condition_is_symmetric(a):
    assert (validate_a1_object(a) == []) == a1_symmetric_holds(a)
