"""
Seeded factory for valid objects and morphisms of C, A2 and A1.

Terminology:
- Frame: a random invertible n×n matrix whose first k columns span A1 and
  whose remaining columns span B1.
- Graph: the complement {a + R·a} of B1 (or {b + S·b} of A1) cut out by a
  linear map R: A1 → B1 (resp. S: B1 → A1).
- Factor: an object drawn at half the ambient bound to be summed with another.
"""

from fractions import Fraction
from typing import Dict, Optional, Tuple

import structlog

from ..domain.constructions import (
    compose_a2,
    compose_c,
    conjugate_a2,
    direct_sum_a2,
    direct_sum_c,
    scalar_a2,
    scalar_c,
)
from ..domain.models import A1Object, A2Morphism, A2Object, CMorphism, CObject, DirectSum
from ..errors import RetryLimitExceededError
from ..functors.equivalence import s_on_morphism, s_on_object
from ..linalg import LinearMap, Matrix, Subspace, is_direct_sum
from .config import GenConfig
from .rng import SplitMix64

logger = structlog.get_logger(__name__)

CPair = Tuple[CMorphism, CMorphism]
A2Pair = Tuple[A2Morphism, A2Morphism]


def c_object_from_graphs(frame: Matrix, k: int, r: Matrix, s: Matrix) -> Optional[CObject]:
    """Build the C object cut out by a frame and two graph maps.

    A1 and B1 are spanned by the first k and the last n-k frame columns, A2 is
    the graph of r (shape (n-k)×k) and B2 the graph of s (shape k×(n-k)).
    Returns None when A2 and B2 meet nontrivially.
    """
    n = frame.rows
    first = frame.take_columns(range(k))
    rest = frame.take_columns(range(k, n))
    a2 = Subspace.span(first + rest @ r)
    b2 = Subspace.span(rest + first @ s)
    if not is_direct_sum(a2, b2):
        return None
    return CObject(
        ambient_dim=n,
        a1=Subspace.span(first),
        a2=a2,
        b1=Subspace.span(rest),
        b2=b2,
    )


class ObjectFactory:
    """Factory for drawing valid category data from a seeded stream."""

    # Relative frequencies of each construction
    C_MORPHISM_WEIGHTS: Dict[str, int] = {
        "scalar": 3,
        "inclusion": 2,
        "projection": 2,
        "composite": 1,
    }
    A2_MORPHISM_WEIGHTS: Dict[str, int] = {
        "scalar": 2,
        "inclusion": 2,
        "projection": 1,
        "s_image": 2,
        "change_of_basis": 1,
        "composite": 1,
    }

    def __init__(self, config: GenConfig, rng: Optional[SplitMix64] = None):
        self.config = config
        self.rng = rng if rng is not None else SplitMix64(config.seed)

    # ------------------------------------------------------------------
    # Scalars and matrices
    # ------------------------------------------------------------------

    def random_entry(self) -> Fraction:
        bound = self.config.entry_bound
        return Fraction(self.rng.randint(-bound, bound))

    def random_matrix(self, rows: int, cols: int) -> Matrix:
        return Matrix(
            rows,
            cols,
            tuple(tuple(self.random_entry() for _ in range(cols)) for _ in range(rows)),
        )

    def random_invertible(self, n: int) -> LinearMap:
        """Unit lower times unit upper triangular; determinant is always 1."""
        lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        upper = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i):
                lower[i][j] = self.random_entry()
        for i in range(n):
            for j in range(i + 1, n):
                upper[i][j] = self.random_entry()
        return LinearMap(Matrix.of(lower, n, n) @ Matrix.of(upper, n, n))

    # ------------------------------------------------------------------
    # Objects
    # ------------------------------------------------------------------

    def random_c_object(self, max_dim: Optional[int] = None) -> CObject:
        bound = self.config.max_ambient_dim if max_dim is None else max_dim
        for attempt in range(1, self.config.retry_limit + 1):
            n = self.rng.randint(0, bound)
            k = self.rng.randint(0, n)
            frame = self.random_invertible(n).matrix
            r = self.random_matrix(n - k, k)
            s = self.random_matrix(k, n - k)
            x = c_object_from_graphs(frame, k, r, s)
            if x is not None:
                return x
            logger.debug("c_object_rejected", attempt=attempt, ambient_dim=n, split=k)
        raise RetryLimitExceededError(
            f"no valid C object after {self.config.retry_limit} attempts"
        )

    def random_a2_object(self, max_dim: Optional[int] = None) -> A2Object:
        """S of a random C object, conjugated by random changes of basis."""
        return self._random_conjugation(s_on_object(self.random_c_object(max_dim))).target

    def random_a1_object(self, max_dim: Optional[int] = None) -> A1Object:
        """A random (u, v) pair; not necessarily satisfying the A1 condition."""
        bound = self.config.max_ambient_dim if max_dim is None else max_dim
        m = self.rng.randint(0, bound)
        n = self.rng.randint(0, bound)
        return A1Object(
            m=m,
            n=n,
            u=LinearMap(self.random_matrix(m, n)),
            v=LinearMap(self.random_matrix(n, m)),
        )

    def _random_conjugation(self, e: A2Object) -> A2Morphism:
        return conjugate_a2(
            e,
            self.random_invertible(e.n_minus),
            self.random_invertible(e.n_zero),
            self.random_invertible(e.n_plus),
        )

    # ------------------------------------------------------------------
    # Morphisms
    # ------------------------------------------------------------------

    def _pick(self, weights: Dict[str, int]) -> str:
        names = list(weights)
        return names[self.rng.weighted_index([weights[name] for name in names])]

    def _c_sum(self) -> DirectSum[CObject, CMorphism]:
        factor = self.config.factor_dim
        return direct_sum_c(self.random_c_object(factor), self.random_c_object(factor))

    def _a2_sum(self) -> DirectSum[A2Object, A2Morphism]:
        factor = self.config.factor_dim
        return direct_sum_a2(self.random_a2_object(factor), self.random_a2_object(factor))

    def random_c_morphism(self) -> CMorphism:
        kind = self._pick(self.C_MORPHISM_WEIGHTS)
        if kind == "scalar":
            return scalar_c(self.random_c_object(), self.random_entry())
        total = self._c_sum()
        first = self.rng.randint(0, 1) == 0
        if kind == "inclusion":
            return total.include_first if first else total.include_second
        if kind == "projection":
            return total.project_first if first else total.project_second
        if first:
            return compose_c(scalar_c(total.total, self.random_entry()), total.include_first)
        # idempotent endomorphism of x⊕y onto y
        return compose_c(total.include_second, total.project_second)

    def random_a2_morphism(self) -> A2Morphism:
        kind = self._pick(self.A2_MORPHISM_WEIGHTS)
        if kind == "scalar":
            return scalar_a2(self.random_a2_object(), self.random_entry())
        if kind == "s_image":
            return s_on_morphism(self.random_c_morphism())
        if kind == "change_of_basis":
            return self._random_conjugation(self.random_a2_object())
        total = self._a2_sum()
        first = self.rng.randint(0, 1) == 0
        if kind == "inclusion":
            return total.include_first if first else total.include_second
        if kind == "projection":
            return total.project_first if first else total.project_second
        include = total.include_first if first else total.include_second
        return compose_a2(self._random_conjugation(total.total), include)

    # ------------------------------------------------------------------
    # Composable pairs (f, g) with g∘f defined
    # ------------------------------------------------------------------

    def random_c_pair(self) -> CPair:
        factor = self.config.factor_dim
        shape = self.rng.randint(0, 3)
        if shape == 0:
            x = self.random_c_object()
            return scalar_c(x, self.random_entry()), scalar_c(x, self.random_entry())
        if shape == 2:
            inner = self._c_sum()
            outer = direct_sum_c(inner.total, self.random_c_object(factor))
            return inner.include_first, outer.include_first
        total = self._c_sum()
        if shape == 1:
            return total.include_first, total.project_first
        return total.include_second, scalar_c(total.total, self.random_entry())

    def random_a2_pair(self) -> A2Pair:
        factor = self.config.factor_dim
        shape = self.rng.randint(0, 4)
        if shape == 0:
            e = self.random_a2_object()
            return scalar_a2(e, self.random_entry()), scalar_a2(e, self.random_entry())
        if shape == 2:
            inner = self._a2_sum()
            outer = direct_sum_a2(inner.total, self.random_a2_object(factor))
            return inner.include_first, outer.include_first
        if shape == 4:
            change = self._random_conjugation(self.random_a2_object())
            return change, scalar_a2(change.target, self.random_entry())
        total = self._a2_sum()
        if shape == 1:
            return total.include_first, total.project_first
        return total.include_second, scalar_a2(total.total, self.random_entry())


def random_invertible(n: int, cfg: GenConfig) -> LinearMap:
    return ObjectFactory(cfg).random_invertible(n)


def random_c_object(cfg: GenConfig) -> CObject:
    return ObjectFactory(cfg).random_c_object()


def random_a2_object(cfg: GenConfig) -> A2Object:
    return ObjectFactory(cfg).random_a2_object()


def random_a1_object(cfg: GenConfig) -> A1Object:
    return ObjectFactory(cfg).random_a1_object()


def random_c_morphism(cfg: GenConfig) -> CMorphism:
    return ObjectFactory(cfg).random_c_morphism()


def random_a2_morphism(cfg: GenConfig) -> A2Morphism:
    return ObjectFactory(cfg).random_a2_morphism()
