"""
Configuration loader for verification suite profiles.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import ConfigurationError

PROFILES_DIR = Path(__file__).parent / "profiles"
PROFILES_FILE = "suite_profiles.yaml"


class SuiteProfile(BaseModel):
    """How many samples each suite check draws, and at what size."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    description: str = ""
    objects: int = Field(ge=0, description="C and A2 objects per object check")
    morphisms: int = Field(ge=0, description="Morphisms per morphism check")
    pairs: int = Field(ge=0, description="Composable pairs per category")
    a1_pairs: int = Field(ge=0, description="Random (u, v) pairs")
    max_ambient_dim: int = Field(default=6, ge=0)
    entry_bound: int = Field(default=3, ge=1)

    def with_samples(self, samples: int) -> "SuiteProfile":
        """Rescale to ``samples`` objects, keeping the 5:2 object/morphism ratio."""
        scaled = (2 * samples + 4) // 5
        return self.model_copy(
            update={
                "objects": samples,
                "a1_pairs": samples,
                "morphisms": scaled,
                "pairs": scaled,
            }
        )


class ConfigurationLoader:
    """Loads suite profiles from YAML files."""

    def __init__(self, config_dir: Optional[Path] = None):
        self.config_dir = Path(config_dir) if config_dir is not None else PROFILES_DIR

    def _load_raw(self) -> Dict[str, Any]:
        config_file = self.config_dir / PROFILES_FILE
        if not config_file.exists():
            raise ConfigurationError(f"Configuration file not found: {config_file}")
        with open(config_file, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}
        profiles = config.get("profiles", {})
        if not isinstance(profiles, dict):
            raise ConfigurationError(f"'profiles' in {config_file} must be a mapping")
        return profiles

    def get_available_profiles(self) -> List[str]:
        return sorted(self._load_raw())

    def load_profile(self, name: str) -> SuiteProfile:
        """Load one named profile."""
        profiles = self._load_raw()
        if name not in profiles:
            available = ", ".join(sorted(profiles)) or "none"
            raise ConfigurationError(f"Unknown profile '{name}' (available: {available})")
        try:
            return SuiteProfile(name=name, **(profiles[name] or {}))
        except ValidationError as exc:
            raise ConfigurationError(f"Profile '{name}' is invalid: {exc}") from exc
