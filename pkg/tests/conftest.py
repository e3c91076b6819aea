"""Shared fixtures and hypothesis strategies for the test suite."""

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from troplactic import BOTTOM, TropMatrix, Word

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


# ---------------------------------------------------------------------------
# strategies
# ---------------------------------------------------------------------------

def scalars(low=-50, high=50):
    """Tropical scalars: small ints or the bottom element."""
    return st.one_of(st.just(BOTTOM), st.integers(low, high))


@st.composite
def matrices(draw, max_n=4, low=-50, high=50):
    """Arbitrary square tropical matrices (no triangularity assumed)."""
    n = draw(st.integers(1, max_n))
    rows = [
        [draw(scalars(low, high)) for _ in range(n)]
        for _ in range(n)
    ]
    return TropMatrix(rows)


@st.composite
def matrix_triples(draw, max_n=4):
    """Three matrices of the same size, for associativity-style laws."""
    n = draw(st.integers(1, max_n))

    def one():
        return TropMatrix(
            [[draw(scalars()) for _ in range(n)] for _ in range(n)]
        )

    return one(), one(), one()


@st.composite
def words(draw, max_n=5, max_len=12, min_len=0):
    """Words over a drawn alphabet size."""
    n = draw(st.integers(1, max_n))
    length = draw(st.integers(min_len, max_len))
    letters = [draw(st.integers(1, n)) for _ in range(length)]
    return Word(n, letters)


@st.composite
def word_pairs(draw, max_n=4, max_len=8):
    """Two words over the same alphabet."""
    n = draw(st.integers(1, max_n))

    def one():
        length = draw(st.integers(0, max_len))
        return Word(n, [draw(st.integers(1, n)) for _ in range(length)])

    return one(), one()


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def rng():
    return random.Random(0)
