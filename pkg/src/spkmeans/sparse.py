"""Sparse unit vectors and the merge-based dot products behind them.

Documents are stored as sorted (index, value) pairs; cluster centers are
dense. On unit vectors the cosine similarity is just the dot product, and
with sparse rows both the sparse-sparse and sparse-dense dot only touch
stored entries. All arithmetic is float64: the cosine-direct formulas in
:mod:`spkmeans.geometry` avoid the catastrophic cancellation that plagues
the sqrt(2 - 2 cos) detour, and double precision covers the rest.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse as sp

from .errors import DimensionMismatchError, ZeroNormError

# A dense vector is a plain 1-D float64 ndarray.
DenseVector = np.ndarray


@dataclass(frozen=True)
class SparseVector:
    """One sample: strictly increasing indices, no explicit zeros."""

    indices: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        idx = np.asarray(self.indices, dtype=np.int64)
        val = np.asarray(self.values, dtype=np.float64)
        if idx.shape != val.shape or idx.ndim != 1:
            raise ValueError("indices and values must be 1-D and equal length")
        keep = val != 0.0
        if not keep.all():
            idx, val = idx[keep], val[keep]
        if idx.size:
            if idx[0] < 0:
                raise ValueError("negative index")
            if idx.size > 1 and not np.all(np.diff(idx) > 0):
                raise ValueError("indices must be strictly increasing")
        idx.setflags(write=False)
        val.setflags(write=False)
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "values", val)

    @property
    def nnz(self) -> int:
        return int(self.indices.size)

    def norm(self) -> float:
        return float(np.sqrt(np.dot(self.values, self.values)))

    def normalized(self) -> "SparseVector":
        nrm = self.norm()
        if nrm == 0.0:
            raise ZeroNormError()
        return SparseVector(self.indices, self.values / nrm)

    def densify(self, dim: int) -> DenseVector:
        if self.indices.size and self.indices[-1] >= dim:
            raise DimensionMismatchError(
                f"index {int(self.indices[-1])} exceeds dimensionality {dim}"
            )
        out = np.zeros(dim, dtype=np.float64)
        out[self.indices] = self.values
        return out


def dot_sparse_sparse(x: SparseVector, y: SparseVector) -> float:
    """Merge dot product; only positions present in both inputs contribute."""
    common, xi, yi = np.intersect1d(
        x.indices, y.indices, assume_unique=True, return_indices=True
    )
    if common.size == 0:
        return 0.0
    return float(np.dot(x.values[xi], y.values[yi]))


def dot_sparse_dense(x: SparseVector, c: DenseVector) -> float:
    if x.indices.size and x.indices[-1] >= c.shape[0]:
        raise DimensionMismatchError(
            f"index {int(x.indices[-1])} exceeds dense length {c.shape[0]}"
        )
    if x.indices.size == 0:
        return 0.0
    return float(np.dot(x.values, c[x.indices]))


def normalize(v):
    """Scale a SparseVector or dense array to unit Euclidean norm."""
    if isinstance(v, SparseVector):
        return v.normalized()
    v = np.asarray(v, dtype=np.float64)
    nrm = float(np.linalg.norm(v))
    if nrm == 0.0:
        raise ZeroNormError()
    return v / nrm


@dataclass
class Dataset:
    """Normalized sparse rows plus cached CSR arrays for the engine.

    Construction normalizes every row; zero-norm rows are rejected with the
    offending row numbers (silent dropping hides data bugs upstream).
    """

    rows: tuple
    dim: int
    n: int = field(init=False)

    def __post_init__(self):
        self.n = len(self.rows)
        self._csr = None

    @classmethod
    def from_rows(cls, rows, dim=None, normalize_rows=True):
        rows = list(rows)
        if not rows:
            raise ValueError("dataset must contain at least one row")
        max_idx = max((int(r.indices[-1]) for r in rows if r.nnz), default=-1)
        if dim is None:
            dim = max_idx + 1
        elif max_idx >= dim:
            raise DimensionMismatchError(
                f"row index {max_idx} exceeds declared dimensionality {dim}"
            )
        bad = [i for i, r in enumerate(rows) if r.nnz == 0 or r.norm() == 0.0]
        if bad:
            raise ZeroNormError(rows=bad)
        if normalize_rows:
            rows = [r.normalized() for r in rows]
        return cls(rows=tuple(rows), dim=dim)

    @property
    def matrix(self) -> sp.csr_matrix:
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            nnz = sum(r.nnz for r in self.rows)
            indices = np.empty(nnz, dtype=np.int64)
            data = np.empty(nnz, dtype=np.float64)
            pos = 0
            for i, r in enumerate(self.rows):
                indices[pos : pos + r.nnz] = r.indices
                data[pos : pos + r.nnz] = r.values
                pos += r.nnz
                indptr[i + 1] = pos
            self._csr = sp.csr_matrix(
                (data, indices, indptr), shape=(self.n, self.dim)
            )
        return self._csr

    def csr_arrays(self):
        m = self.matrix
        return m.indptr.astype(np.int64), m.indices.astype(np.int64), m.data
