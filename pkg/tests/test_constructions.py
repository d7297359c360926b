"""Tests for identities, composition, direct sums and conjugation."""

from fractions import Fraction

import pytest
from hypothesis import given

from perverse_disc.domain import (
    compose_a2,
    compose_c,
    conjugate_a2,
    direct_sum_a2,
    direct_sum_c,
    identity_a2,
    identity_c,
    scalar_a2,
    scalar_c,
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
    zero_a2,
    zero_c,
)
from perverse_disc.errors import DimensionMismatchError, NotInvertibleError, ObjectMismatchError
from perverse_disc.generation import ObjectFactory
from perverse_disc.linalg import LinearMap, identity

from .helpers import seeds, small_config


def test_identity_is_neutral(q2_object):
    f = scalar_c(q2_object, Fraction(3))
    assert compose_c(identity_c(q2_object), f) == f
    assert compose_c(f, identity_c(q2_object)) == f


def test_scalars_compose_by_multiplication(q2_triple):
    product = compose_a2(scalar_a2(q2_triple, Fraction(2)), scalar_a2(q2_triple, Fraction(-3)))
    assert product == scalar_a2(q2_triple, Fraction(-6))


def test_composition_requires_matching_objects(q2_object, zero_object, q2_triple, unit_triple):
    with pytest.raises(ObjectMismatchError):
        compose_c(identity_c(q2_object), identity_c(zero_object))
    with pytest.raises(ObjectMismatchError):
        compose_a2(identity_a2(q2_triple), identity_a2(unit_triple))


def test_zero_morphisms_are_valid(q2_object, zero_object, q2_triple, unit_triple):
    assert validate_c_morphism(zero_c(q2_object, zero_object)) == []
    assert validate_a2_morphism(zero_a2(q2_triple, unit_triple)) == []


def test_c_direct_sum(q2_object):
    total = direct_sum_c(q2_object, q2_object)
    assert total.total.ambient_dim == 4
    assert validate_c_object(total.total) == []
    for f in (total.include_first, total.include_second, total.project_first, total.project_second):
        assert validate_c_morphism(f) == []
    assert compose_c(total.project_first, total.include_first) == identity_c(q2_object)
    assert compose_c(total.project_second, total.include_first).map.matrix.is_zero


def test_a2_direct_sum(q2_triple, unit_triple):
    total = direct_sum_a2(q2_triple, unit_triple)
    assert (total.total.n_minus, total.total.n_zero, total.total.n_plus) == (2, 3, 2)
    assert validate_a2_object(total.total) == []
    for f in (total.include_first, total.include_second, total.project_first, total.project_second):
        assert validate_a2_morphism(f) == []
    assert compose_a2(total.project_second, total.include_second) == identity_a2(unit_triple)


def test_direct_sum_with_zero_object(q2_object, zero_object):
    total = direct_sum_c(q2_object, zero_object)
    assert total.total == q2_object


def test_conjugation_is_an_isomorphism(q2_triple):
    swap = LinearMap.of([[0, 1], [1, 0]])
    change = conjugate_a2(q2_triple, LinearMap.of([[2]]), swap, LinearMap.of([[-1]]))
    assert validate_a2_object(change.target) == []
    assert validate_a2_morphism(change) == []
    assert change.target.delta_minus == LinearMap.of([[0], ["1/2"]])


def test_conjugation_needs_invertible_maps(q2_triple):
    with pytest.raises(NotInvertibleError):
        conjugate_a2(q2_triple, identity(1), LinearMap.of([[1, 1], [1, 1]]), identity(1))
    with pytest.raises(DimensionMismatchError):
        conjugate_a2(q2_triple, identity(2), identity(2), identity(1))


@given(seeds)
def test_composites_of_generated_pairs_are_valid(seed):
    factory = ObjectFactory(small_config(seed))
    f, g = factory.random_c_pair()
    assert validate_c_morphism(compose_c(g, f)) == []
    f2, g2 = factory.random_a2_pair()
    assert validate_a2_morphism(compose_a2(g2, f2)) == []
