"""Small builders shared by the test modules."""

from hypothesis import strategies as st

from perverse_disc.generation import GenConfig
from perverse_disc.generation.rng import MASK64
from perverse_disc.linalg import Matrix, Subspace

seeds = st.integers(min_value=0, max_value=MASK64)


def matrices(max_rows: int = 4, max_cols: int = 4, bound: int = 3):
    """Integer matrices of every shape up to max_rows x max_cols, empty shapes included."""
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            ).map(lambda rows: Matrix.of(rows, r, c))
        )
    )


def line(*vector: int) -> Subspace:
    """span{vector}"""
    return Subspace.from_vectors([vector], len(vector))


def plane(*vectors) -> Subspace:
    return Subspace.from_vectors(vectors, len(vectors[0]))


def small_config(seed: int, max_dim: int = 4) -> GenConfig:
    return GenConfig(seed=seed, max_ambient_dim=max_dim, entry_bound=2)
