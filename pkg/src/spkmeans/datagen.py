"""Deterministic synthetic corpora for fixtures and benchmarks.

Everything is driven by the portable splitmix64 generator, so a (shape,
seed) pair regenerates byte-identical data on any platform or in any
reimplementation of the generator.
"""

import numpy as np

from .rng import PortableRng
from .sparse import Dataset, SparseVector


def random_sparse_rows(n, dim, nnz, seed, signed=False):
    """n rows with ``nnz`` uniformly placed entries each.

    Values are drawn in (0.1, 1.0), negated with probability 1/2 when
    ``signed`` (signed data spreads angles over the whole sphere).
    """
    rng = PortableRng(seed)
    rows = []
    for _ in range(n):
        idx = sorted(rng.sample_without_replacement(dim, nnz))
        vals = []
        for _ in idx:
            v = 0.1 + 0.9 * rng.random()
            if signed and rng.randint(2) == 1:
                v = -v
            vals.append(v)
        rows.append(SparseVector(np.array(idx, dtype=np.int64), np.array(vals)))
    return rows


def clustered_sparse_rows(n, dim, groups, nnz, seed, group_dims=150,
                          noise_frac=0.2):
    """Rows with planted group structure (document-corpus-like).

    Each group owns a random subset of ``group_dims`` dimensions; a row
    draws most of its support from its group's subset and the rest from
    the full space.
    """
    rng = PortableRng(seed)
    pools = [rng.sample_without_replacement(dim, group_dims) for _ in range(groups)]
    rows = []
    for i in range(n):
        g = rng.randint(groups)
        n_noise = max(1, int(round(nnz * noise_frac)))
        n_core = max(1, nnz - n_noise)
        pool = pools[g]
        core = [pool[j] for j in rng.sample_without_replacement(group_dims, n_core)]
        support = set(core)
        while len(support) < n_core + n_noise:
            support.add(rng.randint(dim))
        idx = sorted(support)
        vals = [0.1 + 0.9 * rng.random() for _ in idx]
        rows.append(SparseVector(np.array(idx, dtype=np.int64), np.array(vals)))
    return rows


def random_dataset(n, dim, nnz, seed, signed=False) -> Dataset:
    return Dataset.from_rows(random_sparse_rows(n, dim, nnz, seed, signed=signed),
                             dim=dim)


def clustered_dataset(n, dim, groups, nnz, seed, **kw) -> Dataset:
    return Dataset.from_rows(
        clustered_sparse_rows(n, dim, groups, nnz, seed, **kw), dim=dim
    )
