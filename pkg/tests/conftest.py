"""Shared fixtures.

The exactness grid (25 corpora) is regenerated from the portable RNG at
session start instead of being committed; a (shape, seed) pair pins the
bytes, so regeneration is as stable as a committed file and keeps ~50 MB
of text out of the repo. Only the three corpora with hand-picked
properties (pitfall, five_points, clustered_2000x5000) are committed.
"""

import itertools
from pathlib import Path

import pytest

from spkmeans import corpus_io, datagen

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

# (n, dim, k, seed) for the randomized exactness/audit grid: the full
# {200, 2000} x {256, 5000} x {2, 10, 20, 50} product plus nine extra
# seeds at the corner shapes, 25 corpora total.
GRID = [
    (n, d, k, 1000 + i)
    for i, (n, d, k) in enumerate(
        itertools.product((200, 2000), (256, 5000), (2, 10, 20, 50))
    )
] + [(2000, 5000, 20, 2000 + i) for i in range(5)] + [
    (200, 256, 10, 3000 + i) for i in range(4)
]


def grid_dataset(n, dim, k, seed):
    nnz = max(2, round(0.01 * dim))  # ~1% density
    return datagen.random_dataset(n, dim, nnz, seed=seed)


@pytest.fixture(scope="session")
def exactness_grid():
    """The 25 (dataset, k, seed) tuples, generated once per session."""
    return [(grid_dataset(n, d, k, seed), k, seed) for n, d, k, seed in GRID]


@pytest.fixture(scope="session")
def pitfall_data():
    return corpus_io.load_dataset(FIXTURE_DIR / "pitfall.svml")


@pytest.fixture(scope="session")
def five_points_data():
    return corpus_io.load_dataset(FIXTURE_DIR / "five_points.svml")


@pytest.fixture(scope="session")
def clustered_data():
    return corpus_io.load_dataset(FIXTURE_DIR / "clustered_2000x5000.svml")


@pytest.fixture(scope="session")
def small_data():
    """A 500-point corpus for fast engine-behavior tests."""
    return datagen.random_dataset(500, 64, 5, seed=7)
