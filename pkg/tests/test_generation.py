"""Tests for the seeded generator and the object factory."""

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from perverse_disc.domain import (
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
)
from perverse_disc.errors import RetryLimitExceededError
from perverse_disc.generation import (
    GenConfig,
    ObjectFactory,
    SplitMix64,
    c_object_from_graphs,
    random_a1_object,
    random_a2_object,
    random_c_object,
    random_invertible,
)
from perverse_disc.linalg import Matrix, determinant, rank

from .helpers import line, seeds, small_config


def test_splitmix_reference_values():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_seed_is_masked_to_64_bits():
    assert SplitMix64(1 << 64).state == 0


@given(seeds, st.integers(-5, 5), st.integers(0, 10))
def test_randint_stays_in_range(seed, low, width):
    rng = SplitMix64(seed)
    for _ in range(20):
        assert low <= rng.randint(low, low + width) <= low + width


def test_randint_rejects_empty_range():
    with pytest.raises(ValueError):
        SplitMix64(1).randint(3, 2)


def test_weighted_index_skips_zero_weights():
    rng = SplitMix64(7)
    assert {rng.weighted_index([0, 1, 0]) for _ in range(50)} == {1}


def test_split_streams_differ():
    parent = SplitMix64(42)
    first, second = parent.split(), parent.split()
    assert first.next_u64() != second.next_u64()


def test_config_bounds():
    with pytest.raises(ValidationError):
        GenConfig(entry_bound=0)
    with pytest.raises(ValidationError):
        GenConfig(seed=-1)
    assert GenConfig(max_ambient_dim=6).factor_dim == 3


@given(seeds)
def test_generation_is_deterministic(seed):
    config = small_config(seed)
    assert random_c_object(config) == random_c_object(config)
    assert random_a2_object(config) == random_a2_object(config)
    assert random_a1_object(config) == random_a1_object(config)


@given(seeds, st.integers(0, 5))
def test_random_invertible_has_unit_determinant(seed, n):
    assert determinant(random_invertible(n, small_config(seed))) == 1


@given(seeds)
def test_generated_objects_are_valid(seed):
    factory = ObjectFactory(small_config(seed))
    x = factory.random_c_object()
    assert validate_c_object(x) == []
    assert x.ambient_dim <= 4
    assert validate_a2_object(factory.random_a2_object()) == []


@given(seeds)
def test_generated_objects_have_forced_dimensions(seed):
    factory = ObjectFactory(small_config(seed))
    x = factory.random_c_object()
    assert x.a1.dim == x.a2.dim
    assert x.b1.dim == x.b2.dim
    assert x.a1.dim + x.b1.dim == x.ambient_dim
    e = factory.random_a2_object()
    assert rank(e.delta_minus) == e.n_minus
    assert rank(e.delta_plus) == e.n_plus


@given(seeds)
def test_generated_morphisms_are_valid(seed):
    factory = ObjectFactory(small_config(seed))
    assert validate_c_morphism(factory.random_c_morphism()) == []
    assert validate_a2_morphism(factory.random_a2_morphism()) == []


@given(seeds)
def test_generated_pairs_compose(seed):
    factory = ObjectFactory(small_config(seed))
    f, g = factory.random_c_pair()
    assert f.target == g.source
    f2, g2 = factory.random_a2_pair()
    assert f2.target == g2.source


def test_a1_objects_have_matching_shapes():
    a = random_a1_object(small_config(3))
    assert a.u.matrix.shape == (a.m, a.n)
    assert a.v.matrix.shape == (a.n, a.m)


def test_graphs_that_coincide_are_rejected():
    """R = S = [1] on ℚ² makes A2 = B2 = span(1,1)."""
    one = Matrix.of([[1]])
    assert c_object_from_graphs(Matrix.identity(2), 1, one, one) is None


def test_zero_graphs_reuse_the_frame():
    zero = Matrix.zeros(1, 1)
    x = c_object_from_graphs(Matrix.identity(2), 1, zero, zero)
    assert x is not None
    assert x.a1 == x.a2 == line(1, 0)
    assert x.b1 == x.b2 == line(0, 1)


def test_retry_limit_is_enforced(monkeypatch):
    factory = ObjectFactory(GenConfig(seed=5, retry_limit=3))
    monkeypatch.setattr(
        "perverse_disc.generation.factory.c_object_from_graphs", lambda *args: None
    )
    with pytest.raises(RetryLimitExceededError, match="3 attempts"):
        factory.random_c_object()


@pytest.mark.slow
def test_every_split_is_reached():
    """Draws with ambient at most 6 hit every (dim V, dim A1)."""
    factory = ObjectFactory(GenConfig(seed=42, max_ambient_dim=6))
    seen = set()
    for _ in range(2000):
        x = factory.random_c_object()
        seen.add((x.ambient_dim, x.a1.dim))
    assert seen == {(n, k) for n in range(7) for k in range(n + 1)}
