#!/usr/bin/env python3
"""Regenerate the committed test fixtures under tests/fixtures/.

All three corpora are derived from the portable generator in
spkmeans.rng, so rerunning this script reproduces the committed files
byte-for-byte on any platform.

  pitfall.svml       small nonnegative corpus on which the naive
                     single-drift upper-bound update provably violates
                     bound soundness (regression anchor)
  five_points.svml   tiny corpus for exact seeding-distribution checks
  clustered_2000x5000.svml
                     planted-group corpus used by the pruning-efficacy
                     and benchmark checks
"""

from pathlib import Path

from spkmeans import corpus_io
from spkmeans.datagen import clustered_sparse_rows, random_sparse_rows

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

# (name, generator) pairs; parameters are part of the repo contract --
# changing any of them invalidates committed expectations in the tests.
RECIPES = {
    "pitfall.svml": lambda: random_sparse_rows(50, 6, 3, seed=18),
    "five_points.svml": lambda: random_sparse_rows(5, 4, 3, seed=5),
    "clustered_2000x5000.svml": lambda: clustered_sparse_rows(
        2000, 5000, 20, 50, seed=99, group_dims=150, noise_frac=0.5
    ),
}


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for name, make in RECIPES.items():
        rows = make()
        path = FIXTURES / name
        corpus_io.write_svmlight(rows, path)
        print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
