"""Tests for suite profile loading."""

import pytest

from perverse_disc.config import ConfigurationLoader, SuiteProfile
from perverse_disc.errors import ConfigurationError


def test_bundled_profiles():
    loader = ConfigurationLoader()
    assert loader.get_available_profiles() == ["acceptance", "smoke"]


def test_acceptance_profile_counts():
    profile = ConfigurationLoader().load_profile("acceptance")
    assert (profile.objects, profile.morphisms, profile.pairs, profile.a1_pairs) == (
        500, 200, 200, 500,
    )
    assert profile.max_ambient_dim == 6
    assert profile.entry_bound == 3


def test_unknown_profile_lists_available():
    with pytest.raises(ConfigurationError, match="available: acceptance, smoke"):
        ConfigurationLoader().load_profile("nightly")


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError, match="not found"):
        ConfigurationLoader(tmp_path).load_profile("smoke")


def test_invalid_profile(tmp_path):
    (tmp_path / "suite_profiles.yaml").write_text(
        "profiles:\n  broken:\n    objects: -1\n    morphisms: 1\n    pairs: 1\n    a1_pairs: 1\n"
    )
    with pytest.raises(ConfigurationError, match="broken"):
        ConfigurationLoader(tmp_path).load_profile("broken")


def test_profiles_must_be_a_mapping(tmp_path):
    (tmp_path / "suite_profiles.yaml").write_text("profiles:\n  - smoke\n")
    with pytest.raises(ConfigurationError, match="mapping"):
        ConfigurationLoader(tmp_path).get_available_profiles()


def test_with_samples_keeps_ratio():
    profile = SuiteProfile(name="x", objects=500, morphisms=200, pairs=200, a1_pairs=500)
    scaled = profile.with_samples(10)
    assert (scaled.objects, scaled.morphisms, scaled.pairs, scaled.a1_pairs) == (10, 4, 4, 10)
    assert profile.objects == 500
    assert profile.with_samples(1).morphisms == 1
    assert profile.with_samples(0).morphisms == 0
