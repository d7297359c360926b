"""
Linear maps between coordinate spaces ℚⁿ → ℚᵐ.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from ..errors import DimensionMismatchError
from .matrix import Matrix, Scalar, determinant as matrix_determinant, inverse_matrix, matrix_rank


@dataclass(frozen=True)
class LinearMap:
    """A map ℚ^domain_dim → ℚ^codomain_dim given by its matrix."""

    matrix: Matrix

    @classmethod
    def of(
        cls,
        data: Sequence[Sequence[Union[Scalar, str]]],
        rows: Optional[int] = None,
        cols: Optional[int] = None,
    ) -> "LinearMap":
        return cls(Matrix.of(data, rows=rows, cols=cols))

    @property
    def domain_dim(self) -> int:
        return self.matrix.cols

    @property
    def codomain_dim(self) -> int:
        return self.matrix.rows

    @property
    def is_square(self) -> bool:
        return self.matrix.rows == self.matrix.cols

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return compose(self, other)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return add(self, other)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return sub(self, other)

    def __neg__(self) -> "LinearMap":
        return scale(self, -1)

    def __str__(self) -> str:
        return str(self.matrix)


def identity(n: int) -> LinearMap:
    return LinearMap(Matrix.identity(n))


def zero_map(domain_dim: int, codomain_dim: int) -> LinearMap:
    return LinearMap(Matrix.zeros(codomain_dim, domain_dim))


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """g∘f: apply f first."""
    if g.domain_dim != f.codomain_dim:
        raise DimensionMismatchError(
            f"cannot compose {g.codomain_dim}<-{g.domain_dim} after {f.codomain_dim}<-{f.domain_dim}"
        )
    return LinearMap(g.matrix @ f.matrix)


def add(f: LinearMap, g: LinearMap) -> LinearMap:
    return LinearMap(f.matrix + g.matrix)


def sub(f: LinearMap, g: LinearMap) -> LinearMap:
    return LinearMap(f.matrix - g.matrix)


def scale(f: LinearMap, factor: Scalar) -> LinearMap:
    return LinearMap(f.matrix.scale(factor))


def rank(f: LinearMap) -> int:
    return matrix_rank(f.matrix)


def determinant(f: LinearMap) -> Fraction:
    return matrix_determinant(f.matrix)


def is_invertible(f: LinearMap) -> bool:
    """Square and of full rank. The empty map ℚ⁰ → ℚ⁰ is invertible."""
    return f.is_square and rank(f) == f.domain_dim


def inverse(f: LinearMap) -> LinearMap:
    """Raises NotInvertibleError for non-square or singular input."""
    return LinearMap(inverse_matrix(f.matrix))
