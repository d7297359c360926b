"""
Domain models for the linear-algebra descriptions of perverse sheaves on a disc.

Terminology:
- C object: a space V with four subspaces A1, A2, B1, B2 such that every
  Ai ⊕ Bj = V.
- A2 object: spaces (E-, E0, E+) with maps delta± : E± → E0 and
  gamma± : E0 → E± such that gamma±∘delta± = 1 and gamma∓∘delta± is invertible.
- A1 object: spaces of dimensions m, n with u : ℚⁿ → ℚᵐ and v : ℚᵐ → ℚⁿ such
  that 1 - u∘v is invertible.
- eta±, xi± : the structure maps of a morphism's target A2 object.
- Violation: one failed condition, reported as a value rather than raised.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Generic, TypeVar

from ..linalg import LinearMap, Subspace


class ViolationKind(Enum):
    """Why a validator or certificate rejected a value."""
    SHAPE_MISMATCH = "shape-mismatch"
    INTERSECTION_NONZERO = "intersection-nonzero"
    DIMENSIONS_SHORT = "dimensions-short"
    CONTAINMENT_FAILED = "containment-failed"
    NOT_IDENTITY = "not-identity"
    NOT_INVERTIBLE = "not-invertible"
    SQUARE_NOT_COMMUTING = "square-not-commuting"
    DATA_MISMATCH = "data-mismatch"
    INVALID_INPUT = "invalid-input"


@dataclass(frozen=True)
class Violation:
    """A single failed condition."""
    kind: ViolationKind
    location: str
    detail: str = ""

    def prefixed(self, prefix: str) -> "Violation":
        return Violation(self.kind, f"{prefix}.{self.location}", self.detail)

    def __str__(self) -> str:
        text = f"{self.kind.value} {self.location}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class CObject:
    """V = ℚ^ambient_dim with the subspaces A1, A2, B1, B2."""
    ambient_dim: int
    a1: Subspace
    a2: Subspace
    b1: Subspace
    b2: Subspace

    def subspace(self, name: str) -> Subspace:
        """Look up ``"a1"``, ``"a2"``, ``"b1"`` or ``"b2"``."""
        return getattr(self, name)


@dataclass(frozen=True)
class CMorphism:
    """A map V → W sending each Ai into Xi and each Bi into Yi."""
    source: CObject
    target: CObject
    map: LinearMap


@dataclass(frozen=True)
class A2Object:
    """The triple E- ⇄ E0 ⇄ E+ with its four structure maps."""
    n_minus: int
    n_zero: int
    n_plus: int
    delta_minus: LinearMap  # E- -> E0
    gamma_minus: LinearMap  # E0 -> E-
    delta_plus: LinearMap  # E+ -> E0
    gamma_plus: LinearMap  # E0 -> E+


@dataclass(frozen=True)
class A2Morphism:
    """Maps (e-, e0, e+) making the four squares commute."""
    source: A2Object
    target: A2Object
    e_minus: LinearMap
    e_zero: LinearMap
    e_plus: LinearMap


@dataclass(frozen=True)
class A1Object:
    """A pair of spaces with u : ℚⁿ → ℚᵐ and v : ℚᵐ → ℚⁿ."""
    m: int
    n: int
    u: LinearMap
    v: LinearMap


O = TypeVar("O", CObject, A2Object)
M = TypeVar("M", CMorphism, A2Morphism)


@dataclass(frozen=True)
class DirectSum(Generic[O, M]):
    """X ⊕ Y together with its canonical inclusions and projections."""
    total: O
    include_first: M
    include_second: M
    project_first: M
    project_second: M
