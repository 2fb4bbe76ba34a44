"""Corpus ingestion, TF-IDF weighting, and result serialization.

The interchange format is line-oriented SVMlight/libsvm text: an optional
leading label token, then ``index:value`` pairs with strictly increasing
indices. Indices are taken as written (0-based files stay 0-based); labels
are discarded since clustering is unsupervised. Stats CSVs mirror the
per-iteration instrumentation columns.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParseError, ZeroNormError
from .sparse import Dataset, SparseVector

STATS_HEADER = ["iteration", "sim_count", "cc_sim_count",
                "reassignments", "objective", "elapsed_ns"]


@dataclass
class CorpusMeta:
    n_rows: int
    n_cols: int
    density: float
    source: str


def parse_svmlight(path, dim=None):
    """Parse a sparse matrix file into raw (unnormalized) rows.

    Returns (rows, meta). Dimensionality is max index + 1 unless ``dim``
    is given. Empty lines and ``#`` comment lines are skipped; explicit
    zero values are stripped; malformed pairs and non-increasing indices
    raise with the 1-based line number.
    """
    rows = []
    max_idx = -1
    nnz = 0
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            tokens = text.split()
            if ":" not in tokens[0]:
                tokens = tokens[1:]  # label, discarded
            idx_list = []
            val_list = []
            prev = -1
            for tok in tokens:
                head, sep, tail = tok.partition(":")
                if not sep:
                    raise ParseError(line_no, f"malformed pair {tok!r}")
                try:
                    i = int(head)
                    v = float(tail)
                except ValueError:
                    raise ParseError(line_no, f"non-numeric pair {tok!r}") from None
                if i <= prev:
                    raise ParseError(
                        line_no, f"indices not strictly increasing at {tok!r}"
                    )
                prev = i
                idx_list.append(i)
                val_list.append(v)
            row = SparseVector(np.array(idx_list, dtype=np.int64),
                               np.array(val_list))
            if row.nnz:
                max_idx = max(max_idx, int(row.indices[-1]))
            nnz += row.nnz
            rows.append(row)
    if dim is None:
        dim = max_idx + 1
    elif max_idx >= dim:
        raise ParseError(0, f"index {max_idx} exceeds declared dim {dim}")
    density = nnz / (len(rows) * dim) if rows and dim else 0.0
    meta = CorpusMeta(n_rows=len(rows), n_cols=dim, density=density,
                      source=str(path))
    return rows, meta


def write_svmlight(rows, path, labels=None):
    with open(path, "w", encoding="utf-8") as fh:
        for i, row in enumerate(rows):
            label = labels[i] if labels is not None else 0
            pairs = " ".join(
                f"{int(j)}:{v:.17g}" for j, v in zip(row.indices, row.values)
            )
            fh.write(f"{label} {pairs}\n".rstrip() + "\n")


def apply_tfidf(rows, smooth=False):
    """Weight raw term counts by inverse document frequency.

    Default: tf * ln(n / df). With ``smooth``, the scikit-learn-style
    tf * (ln((1+n) / (1+df)) + 1). Terms present in every document get
    idf 0 under the default and are dropped; rows that end up all-zero
    are rejected with their indices.
    """
    n = len(rows)
    df: dict[int, int] = {}
    for row in rows:
        for j in row.indices:
            df[int(j)] = df.get(int(j), 0) + 1
    if smooth:
        idf = {j: math.log((1.0 + n) / (1.0 + c)) + 1.0 for j, c in df.items()}
    else:
        idf = {j: math.log(n / c) for j, c in df.items()}
    out = []
    empty = []
    for i, row in enumerate(rows):
        weights = np.array([idf[int(j)] for j in row.indices])
        weighted = SparseVector(row.indices, row.values * weights)
        if weighted.nnz == 0:
            empty.append(i)
        out.append(weighted)
    if empty:
        raise ZeroNormError(rows=empty,
                            message=f"TF-IDF zeroed rows {empty}")
    return out


def load_dataset(path, tfidf=False, smooth=False, dim=None) -> Dataset:
    """Parse, optionally TF-IDF weight, and normalize into a Dataset."""
    rows, meta = parse_svmlight(path, dim=dim)
    if tfidf:
        rows = apply_tfidf(rows, smooth=smooth)
    return Dataset.from_rows(rows, dim=meta.n_cols)


def write_assignments(result, path):
    with open(path, "w", encoding="utf-8") as fh:
        for i, c in enumerate(result.assignments):
            fh.write(f"{i},{int(c)}\n")


def write_stats_csv(result, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(STATS_HEADER)
        for s in result.iterations:
            writer.writerow([s.iteration, s.sim_count, s.cc_sim_count,
                             s.reassignments, f"{s.objective:.17g}",
                             s.elapsed_ns])


def read_stats_csv(path):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return list(reader)
