"""
Subspaces of coordinate spaces, stored by their canonical basis.

A subspace of ℚⁿ is represented by the reduced column echelon form of any
spanning set, so two subspaces are equal exactly when their dataclasses are
equal. Everything the category code needs (sums, intersections, direct-sum
tests, projections along complements) is computed on these bases.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from ..errors import DimensionMismatchError, ImageNotContainedError, NotADirectSumError
from .maps import LinearMap
from .matrix import Matrix, Row, Scalar, inverse_matrix, rcef, rref, solve


def _is_reduced_column_echelon(basis: Matrix) -> bool:
    last_pivot = -1
    for j, column in enumerate(basis.columns()):
        pivot = next((i for i, x in enumerate(column) if x != 0), None)
        if pivot is None or pivot <= last_pivot or column[pivot] != 1:
            return False
        if any(basis.entries[pivot][k] != 0 for k in range(basis.cols) if k != j):
            return False
        last_pivot = pivot
    return True


@dataclass(frozen=True)
class Subspace:
    """A subspace of ℚ^ambient_dim with its canonical basis as columns."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.basis.rows != self.ambient_dim:
            raise DimensionMismatchError(
                f"basis has {self.basis.rows} rows, ambient dimension is {self.ambient_dim}"
            )
        if not _is_reduced_column_echelon(self.basis):
            raise ValueError("basis is not in reduced column echelon form; use Subspace.span")

    @classmethod
    def span(cls, generators: Matrix) -> "Subspace":
        """The column span of ``generators``, canonicalized."""
        canonical, _ = rcef(generators)
        return cls(generators.rows, canonical)

    @classmethod
    def from_vectors(
        cls, vectors: Sequence[Sequence[Union[Scalar, str]]], ambient_dim: int
    ) -> "Subspace":
        return cls.span(Matrix.from_columns(vectors, rows=ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> Tuple[Row, ...]:
        return self.basis.columns()

    def inclusion(self) -> LinearMap:
        """The basis as a map ℚ^dim → ℚ^ambient_dim."""
        return LinearMap(self.basis)

    def __str__(self) -> str:
        inner = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vectors())
        return f"span{{{inner}}} ⊆ Q^{self.ambient_dim}"


def _require_same_ambient(s1: Subspace, s2: Subspace) -> None:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}"
        )


def image_basis(f: LinearMap) -> Subspace:
    return Subspace.span(f.matrix)


def kernel_basis(f: LinearMap) -> Subspace:
    reduced, pivots = rref(f.matrix)
    n = f.domain_dim
    vectors = []
    for free in (c for c in range(n) if c not in pivots):
        vector = [Fraction(0)] * n
        vector[free] = Fraction(1)
        for row, pivot in enumerate(pivots):
            vector[pivot] = -reduced.entries[row][free]
        vectors.append(vector)
    return Subspace.span(Matrix.from_columns(vectors, rows=n))


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _require_same_ambient(s1, s2)
    return Subspace.span(s1.basis.hstack(s2.basis))


def subspace_intersection(s1: Subspace, s2: Subspace) -> Subspace:
    """Solve B₁x = B₂y; the intersection is spanned by the vectors B₁x."""
    _require_same_ambient(s1, s2)
    if s1.dim == 0 or s2.dim == 0:
        return Subspace.zero(s1.ambient_dim)
    relations = kernel_basis(LinearMap(s1.basis.hstack(-s2.basis)))
    first_block = relations.basis.take_rows(range(s1.dim))
    return Subspace.span(s1.basis @ first_block)


def is_direct_sum(s1: Subspace, s2: Subspace) -> bool:
    """True iff s1 ⊕ s2 is the whole ambient space."""
    _require_same_ambient(s1, s2)
    if s1.dim + s2.dim != s1.ambient_dim:
        return False
    return subspace_intersection(s1, s2).dim == 0


def projection_along(a: Subspace, b: Subspace) -> LinearMap:
    """The projection V = a ⊕ b → a with kernel b, in a's basis coordinates."""
    if not is_direct_sum(a, b):
        raise NotADirectSumError("subspaces are not complementary")
    change_of_basis = inverse_matrix(a.basis.hstack(b.basis))
    return LinearMap(change_of_basis.take_rows(range(a.dim)))


def contains(s: Subspace, t: Subspace) -> bool:
    """True iff t ⊆ s."""
    _require_same_ambient(s, t)
    return solve(s.basis, t.basis) is not None


def coordinates_in(s: Subspace, f: LinearMap) -> LinearMap:
    """The unique g with ``s.basis @ g == f``; f must land in s."""
    if f.codomain_dim != s.ambient_dim:
        raise DimensionMismatchError(
            f"map lands in Q^{f.codomain_dim}, subspace lives in Q^{s.ambient_dim}"
        )
    coordinates = solve(s.basis, f.matrix)
    if coordinates is None:
        raise ImageNotContainedError("image of the map is not contained in the subspace")
    return LinearMap(coordinates)
