"""
Generator configuration.
"""

from pydantic import BaseModel, ConfigDict, Field

from .rng import MASK64


class GenConfig(BaseModel):
    """Seed and size knobs for random object generation."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(default=0, ge=0, le=MASK64, description="64-bit unsigned seed")
    max_ambient_dim: int = Field(default=6, ge=0, description="Largest dim of V or E0")
    entry_bound: int = Field(default=3, ge=1, description="Random entries lie in [-b, b]")
    retry_limit: int = Field(default=64, ge=1, description="Rejections before giving up")

    @property
    def factor_dim(self) -> int:
        """Ambient bound for direct-sum factors inside morphism draws."""
        return (self.max_ambient_dim + 1) // 2
