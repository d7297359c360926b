"""Shared fixtures: the worked ℚ² example and hypothesis profiles."""

import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from perverse_disc.domain import A2Object, CObject
from perverse_disc.linalg import LinearMap, Subspace

from .helpers import line

settings.register_profile(
    "ci",
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("dev", max_examples=25, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def q2_object() -> CObject:
    """V = ℚ², A = (span(1,0), span(1,1)), B = (span(0,1), span(1,-1))."""
    return CObject(
        ambient_dim=2,
        a1=line(1, 0),
        a2=line(1, 1),
        b1=line(0, 1),
        b2=line(1, -1),
    )


@pytest.fixture
def q2_triple() -> A2Object:
    """S of the ℚ² example."""
    return A2Object(
        n_minus=1,
        n_zero=2,
        n_plus=1,
        delta_minus=LinearMap.of([[1], [0]]),
        gamma_minus=LinearMap.of([[1, 0]]),
        delta_plus=LinearMap.of([[1], [1]]),
        gamma_plus=LinearMap.of([["1/2", "1/2"]]),
    )


@pytest.fixture
def unit_triple() -> A2Object:
    """n- = n0 = n+ = 1 with every map [1]."""
    one = LinearMap.of([[1]])
    return A2Object(1, 1, 1, one, one, one, one)


@pytest.fixture
def zero_object() -> CObject:
    return CObject(0, *(Subspace.zero(0) for _ in range(4)))


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR
