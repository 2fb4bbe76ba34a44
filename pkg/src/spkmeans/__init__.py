"""Spherical k-means clustering with cosine-similarity pruning bounds.

Sparse unit vectors, five optimizer variants (standard, Elkan, simplified
Elkan, Hamerly, simplified Hamerly), k-means++/AFK-MC2 seeding, SVMlight
ingestion with optional TF-IDF, and per-iteration instrumentation of
similarity computations.
"""

from .errors import (
    ConfigError,
    DimensionMismatchError,
    InfeasibleError,
    ParseError,
    ZeroNormError,
)
from .sparse import Dataset, SparseVector, dot_sparse_dense, dot_sparse_sparse, normalize
from .seeding import SeedConfig, init_afkmc2, init_kmpp, init_uniform
from .engine import (
    CentroidSet,
    ClusteringResult,
    IterationStats,
    VARIANTS,
    assign_full,
    compute_objective,
    run,
    update_centers,
)

__all__ = [
    "ConfigError",
    "DimensionMismatchError",
    "InfeasibleError",
    "ParseError",
    "ZeroNormError",
    "Dataset",
    "SparseVector",
    "dot_sparse_dense",
    "dot_sparse_sparse",
    "normalize",
    "SeedConfig",
    "init_afkmc2",
    "init_kmpp",
    "init_uniform",
    "CentroidSet",
    "ClusteringResult",
    "IterationStats",
    "VARIANTS",
    "assign_full",
    "compute_objective",
    "run",
    "update_centers",
]
