"""Tests for subspaces: kernels, images, sums, intersections and projections."""

from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perverse_disc.errors import (
    DimensionMismatchError,
    ImageNotContainedError,
    NotADirectSumError,
)
from perverse_disc.generation import SplitMix64
from perverse_disc.linalg import (
    LinearMap,
    Matrix,
    Subspace,
    contains,
    coordinates_in,
    identity,
    image_basis,
    inverse,
    is_direct_sum,
    kernel_basis,
    projection_along,
    rank,
    subspace_intersection,
    subspace_sum,
)

from .helpers import line, matrices, plane


def subspaces(ambient: int):
    vectors = st.lists(st.integers(-2, 2), min_size=ambient, max_size=ambient)
    return st.lists(vectors, max_size=ambient + 1).map(
        lambda columns: Subspace.from_vectors(columns, ambient)
    )


def test_basis_must_be_canonical():
    with pytest.raises(ValueError):
        Subspace(2, Matrix.of([[2], [0]]))


def test_kernel_examples():
    assert kernel_basis(identity(2)) == Subspace.zero(2)
    assert kernel_basis(LinearMap.of([[1, 1]])) == line(1, -1)
    assert kernel_basis(LinearMap.of([[0, 0]])) == Subspace.full(2)


def test_image_examples():
    assert image_basis(identity(3)) == Subspace.full(3)
    assert image_basis(LinearMap.of([[1], [1]])) == line(1, 1)
    equal_columns = image_basis(LinearMap.of([[1, 1], [0, 0]]))
    assert equal_columns == line(1, 0)
    assert equal_columns.dim == 1


def test_sum_examples():
    assert subspace_sum(line(1, 0), line(0, 1)) == Subspace.full(2)
    s = line(1, 2)
    assert subspace_sum(s, s) == s
    z_zero = subspace_sum(line(1, 0, 0), line(1, 1, 0))
    assert z_zero == plane((1, 0, 0), (0, 1, 0))


def test_intersection_examples():
    assert subspace_intersection(Subspace.full(2), line(1, 1)) == line(1, 1)
    assert subspace_intersection(line(1, 0), line(0, 1)) == Subspace.zero(2)


def test_ambient_mismatch():
    with pytest.raises(DimensionMismatchError):
        subspace_sum(line(1, 0), line(1, 0, 0))
    with pytest.raises(DimensionMismatchError):
        subspace_intersection(line(1, 0), line(1, 0, 0))


def test_direct_sum_examples():
    assert is_direct_sum(line(1, 0), line(0, 1))
    assert not is_direct_sum(line(1, 0), line(1, 0))
    assert is_direct_sum(line(1, 1), line(1, -1))
    assert is_direct_sum(Subspace.zero(0), Subspace.zero(0))


def test_projection_examples():
    assert projection_along(line(1, 0), line(0, 1)) == LinearMap.of([[1, 0]])
    assert projection_along(line(1, 1), line(1, -1)) == LinearMap.of([["1/2", "1/2"]])
    full = Subspace.full(2)
    assert projection_along(full, Subspace.zero(2)) == inverse(full.inclusion())


def test_projection_requires_complements():
    with pytest.raises(NotADirectSumError):
        projection_along(line(1, 0), line(2, 0))


def test_contains_examples():
    assert contains(Subspace.full(2), line(1, 1))
    assert not contains(line(1, 0), line(1, 1))
    assert contains(plane((1, 0, 0), (0, 1, 0)), line(2, 3, 0))


def test_coordinates_in_examples():
    assert coordinates_in(line(1, 1), LinearMap.of([[2], [2]])) == LinearMap.of([[2]])
    f = LinearMap.of([[1, 2], [3, 4]])
    assert coordinates_in(Subspace.full(2), f) == f
    s = plane((1, 0), (1, 1))
    assert coordinates_in(s, LinearMap.of([[3], [1]])) == LinearMap.of([[3], [1]])


def test_coordinates_in_errors():
    with pytest.raises(ImageNotContainedError):
        coordinates_in(line(1, 0), LinearMap.of([[1], [1]]))
    with pytest.raises(DimensionMismatchError):
        coordinates_in(line(1, 0), LinearMap.of([[1], [1], [1]]))


@given(matrices())
def test_rank_nullity(m):
    f = LinearMap(m)
    assert kernel_basis(f).dim + image_basis(f).dim == f.domain_dim
    assert (m @ kernel_basis(f).basis).is_zero


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(subspaces(n), subspaces(n))))
def test_dimension_formula(pair):
    s1, s2 = pair
    meet = subspace_intersection(s1, s2)
    join = subspace_sum(s1, s2)
    assert meet.dim + join.dim == s1.dim + s2.dim
    assert contains(s1, meet) and contains(s2, meet)


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(subspaces(n), subspaces(n))))
def test_projection_laws(pair):
    a, b = pair
    if is_direct_sum(a, b):
        p = projection_along(a, b)
        assert p @ a.inclusion() == identity(a.dim)
        assert (p @ b.inclusion()).matrix.is_zero


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@pytest.mark.slow
def test_line_intersections_against_cross_product():
    """Every pair of vectors in {-2..2}³: the spans meet iff both are nonzero and parallel."""
    grid = list(product(range(-2, 3), repeat=3))
    spans = {v: Subspace.from_vectors([v], 3) for v in grid}
    checked = 0
    for u, v in product(grid, grid):
        expected = int(any(u) and any(v) and not any(_cross(u, v)))
        meet = subspace_intersection(spans[u], spans[v])
        assert meet.dim == expected, (u, v)
        stacked = LinearMap(spans[u].basis.hstack(spans[v].basis))
        assert meet.dim == spans[u].dim + spans[v].dim - rank(stacked)
        checked += 1
    assert checked >= 10_000


def _sweep_grid(n: int):
    """Distinct subspaces of ℚⁿ spanned by small integer vectors, at most 40 per dimension."""
    values = range(-2, 3) if n <= 2 else range(-1, 2)
    vectors = [v for v in product(values, repeat=n) if any(v)]
    found = {Subspace.zero(n), Subspace.full(n)}
    found.update(Subspace.from_vectors([v], n) for v in vectors)
    found.update(Subspace.from_vectors(pair, n) for pair in combinations(vectors, 2))
    found.update(kernel_basis(LinearMap(Matrix.of([v], 1, n))) for v in vectors)
    by_dim = {}
    for s in sorted(found, key=lambda s: (s.dim, s.basis.entries)):
        by_dim.setdefault(s.dim, []).append(s)
    return [s for group in by_dim.values() for s in group[:40]]


@pytest.mark.slow
def test_subspace_pairs_against_rank_formula():
    checked = 0
    for n in range(5):
        grid = _sweep_grid(n)
        assert {s.dim for s in grid} == set(range(n + 1))
        for s1, s2 in product(grid, grid):
            stacked = rank(LinearMap(s1.basis.hstack(s2.basis)))
            meet = subspace_intersection(s1, s2)
            assert meet.dim == s1.dim + s2.dim - stacked, (s1, s2)
            assert contains(s1, meet) and contains(s2, meet)
            assert subspace_sum(s1, s2).dim == stacked
            checked += 1
    assert checked >= 10_000


@pytest.mark.slow
def test_rank_nullity_on_ten_thousand_maps():
    rng = SplitMix64(2024)
    for _ in range(10_000):
        rows, cols = rng.randint(0, 4), rng.randint(0, 4)
        m = Matrix.of(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], rows, cols
        )
        f = LinearMap(m)
        assert kernel_basis(f).dim + image_basis(f).dim == cols
