"""Spherical k-means optimizers behind a single ``run`` interface.

Five variants share center maintenance, convergence logic, and
instrumentation; they differ only in which similarity computations they
prune, so for a fixed seeding they all produce identical assignments.

Per-iteration instrumentation counts every point-center similarity
(``sim_count``; exactly n*k for the standard variant) and every
center-center similarity (``cc_sim_count``; k*(k-1)/2 for the variants
using the half-angle thresholds).
"""

import time
from dataclasses import dataclass, field

import numpy as np

from . import geometry, kernels
from .errors import ConfigError, InfeasibleError
from .sparse import Dataset

VARIANTS = ("standard", "elkan", "simp_elkan", "hamerly", "simp_hamerly")

_ELKAN_FAMILY = frozenset({"elkan", "simp_elkan"})
_HAMERLY_FAMILY = frozenset({"hamerly", "simp_hamerly"})
_CC_VARIANTS = frozenset({"elkan", "hamerly"})
_ZERO_SUM_EPS = 1e-12
_SCRATCH_INTERVAL = 50  # keeps incremental-sum drift below ~1e-10 at desk scale


@dataclass
class CentroidSet:
    """Dense unit centers plus the running state needed to move them."""

    centers: np.ndarray        # (k, d) unit rows
    sums: np.ndarray           # (k, d) unnormalized member sums
    counts: np.ndarray         # (k,) member counts
    prev_centers: np.ndarray   # (k, d) positions before the last move
    drift: np.ndarray          # (k,) p(j) = <c(j), c'(j)>
    seed_indices: np.ndarray | None = None

    @property
    def k(self) -> int:
        return self.centers.shape[0]

    @classmethod
    def from_data_rows(cls, data: Dataset, row_indices) -> "CentroidSet":
        idx = np.asarray(row_indices, dtype=np.int64)
        centers = np.stack([data.rows[int(i)].densify(data.dim) for i in idx])
        k = centers.shape[0]
        return cls(
            centers=centers,
            sums=np.zeros_like(centers),
            counts=np.zeros(k, dtype=np.int64),
            prev_centers=centers.copy(),
            drift=np.ones(k),
            seed_indices=idx,
        )


@dataclass
class BoundsState:
    """Bound arrays handed to debug hooks; views into live engine state."""

    variant: str
    a: np.ndarray
    l: np.ndarray
    u_matrix: np.ndarray | None = None
    u: np.ndarray | None = None


@dataclass
class IterationStats:
    iteration: int
    sim_count: int
    cc_sim_count: int
    reassignments: int
    objective: float
    elapsed_ns: int


@dataclass
class ClusteringResult:
    assignments: np.ndarray
    centers: CentroidSet
    objective: float
    iterations: list[IterationStats] = field(default_factory=list)
    converged: bool = False

    @property
    def total_sims(self) -> int:
        return sum(s.sim_count for s in self.iterations)

    @property
    def total_cc_sims(self) -> int:
        return sum(s.cc_sim_count for s in self.iterations)


def _full_sims(data: Dataset, centers: np.ndarray) -> np.ndarray:
    return np.asarray(data.matrix @ centers.T)


def assign_full(data: Dataset, centroids):
    """Full argmax pass; ties resolve to the lowest cluster index.

    Returns (assignments, best similarity, second-best similarity); the
    latter two seed the bound arrays of the accelerated variants.
    """
    centers = centroids.centers if isinstance(centroids, CentroidSet) else centroids
    S = _full_sims(data, centers)
    n, k = S.shape
    a = np.argmax(S, axis=1).astype(np.int64)
    best = S[np.arange(n), a].copy()
    if k == 1:
        second = np.full(n, -1.0)
    else:
        masked = S.copy()
        masked[np.arange(n), a] = -np.inf
        second = masked.max(axis=1)
    return a, best, second


def compute_objective(data: Dataset, assignments, centroids) -> float:
    """Sum over points of the similarity to the assigned center."""
    centers = centroids.centers if isinstance(centroids, CentroidSet) else centroids
    S = _full_sims(data, centers)
    return float(S[np.arange(data.n), np.asarray(assignments)].sum())


def _aggregate_sums(data: Dataset, a: np.ndarray, k: int):
    from scipy import sparse as sp

    n = data.n
    onehot = sp.csr_matrix(
        (np.ones(n), (a, np.arange(n))), shape=(k, n)
    )
    sums = np.asarray((onehot @ data.matrix).todense())
    counts = np.bincount(a, minlength=k).astype(np.int64)
    return sums, counts


def _move_centers(cents: CentroidSet, changed_clusters):
    """Renormalize the sums of changed clusters and record drift.

    Untouched clusters keep their center bit-identically with p(j) = 1.
    Empty clusters and exactly-cancelling sums retain the previous center
    direction (the normalized mean is undefined there) with p(j) = 1.
    """
    cents.drift.fill(1.0)
    for j in changed_clusters:
        old = cents.centers[j].copy()
        cents.prev_centers[j] = old
        if cents.counts[j] == 0:
            continue
        nrm = float(np.linalg.norm(cents.sums[j]))
        if nrm < _ZERO_SUM_EPS:
            continue
        new = cents.sums[j] / nrm
        cents.centers[j] = new
        cents.drift[j] = float(geometry.clamp_cos(np.dot(new, old)))


def update_centers(data: Dataset, assignments, centroids: CentroidSet,
                   prev_assignments=None) -> CentroidSet:
    """Move centers for the given assignments (mutates and returns).

    With ``prev_assignments`` the member sums are adjusted incrementally
    for changed points only; otherwise they are rebuilt from scratch.
    """
    a = np.asarray(assignments, dtype=np.int64)
    k = centroids.k
    if prev_assignments is None:
        centroids.sums, centroids.counts = _aggregate_sums(data, a, k)
        changed = range(k)
    else:
        prev = np.asarray(prev_assignments, dtype=np.int64)
        moved = np.nonzero(a != prev)[0]
        touched = set()
        for i in moved:
            row = data.rows[int(i)]
            centroids.sums[prev[i], row.indices] -= row.values
            centroids.sums[a[i], row.indices] += row.values
            centroids.counts[prev[i]] -= 1
            centroids.counts[a[i]] += 1
            touched.add(int(prev[i]))
            touched.add(int(a[i]))
        changed = sorted(touched)
    _move_centers(centroids, changed)
    return centroids


def _center_thresholds(centers: np.ndarray):
    """Half-angle center-center matrix cc and row maxima s (diag excluded)."""
    S = geometry.clamp_cos(centers @ centers.T)
    cc = geometry.half_angle_cc(S)
    np.fill_diagonal(cc, -1.0)
    s_arr = cc.max(axis=1)
    return cc, s_arr


def run(data: Dataset, k: int, variant: str, seeding, max_iter: int = 100,
        debug_hook=None, hamerly_update: str = "safe") -> ClusteringResult:
    """Cluster ``data`` into ``k`` groups with the requested variant.

    Alternates assignment and center update until an iteration reassigns
    nothing (or no reassignment is possible) or ``max_iter`` is reached.
    ``debug_hook(iteration, bounds, centroids)`` is invoked each iteration
    after the drift updates and before the pruned scan, so auditors can
    check bound soundness against the centers the scan will use.

    ``hamerly_update`` selects the single-bound drift update: ``"safe"``
    drops the u*p factor so the bound dominates every per-cluster update,
    ``"naive"`` applies the per-cluster formula with the one worst drift
    (unsound; kept selectable for the regression harness).
    """
    if variant not in VARIANTS:
        raise ConfigError(f"unknown variant {variant!r}")
    if hamerly_update not in ("safe", "naive"):
        raise ConfigError(f"unknown hamerly_update {hamerly_update!r}")
    if not 1 <= k <= data.n:
        raise InfeasibleError(f"k={k} infeasible for n={data.n}")

    from .seeding import make_centroids

    cents = make_centroids(data, k, seeding)
    indptr, indices, values = data.csr_arrays()
    n = data.n
    elkan_family = variant in _ELKAN_FAMILY
    hamerly_family = variant in _HAMERLY_FAMILY
    needs_cc = variant in _CC_VARIANTS

    a = np.zeros(n, dtype=np.int64)
    l = np.zeros(n)
    u_m = None
    u = None
    stats: list[IterationStats] = []
    converged = False

    for it in range(1, max_iter + 1):
        t0 = time.monotonic_ns()
        cc_count = 0
        if needs_cc:
            cc, s_arr = _center_thresholds(cents.centers)
            cc_count = k * (k - 1) // 2
        else:
            cc = np.zeros((1, 1))
            s_arr = np.zeros(1)

        if it == 1:
            S = _full_sims(data, cents.centers)
            sim_count = n * k
            a = np.argmax(S, axis=1).astype(np.int64)
            l = S[np.arange(n), a].copy()
            if elkan_family:
                u_m = S.copy()
            elif hamerly_family:
                if k == 1:
                    u = np.full(n, -1.0)
                else:
                    masked = S.copy()
                    masked[np.arange(n), a] = -np.inf
                    u = masked.max(axis=1)
            reassignments = n
            cents.sums, cents.counts = _aggregate_sums(data, a, k)
            _move_centers(cents, range(k))
        else:
            a_prev = a.copy()
            if variant == "standard":
                S = _full_sims(data, cents.centers)
                sim_count = n * k
                a = np.argmax(S, axis=1).astype(np.int64)
            else:
                p = cents.drift
                l = geometry.update_lower_bound(l, p[a])
                if elkan_family:
                    # substituting the bound for the exact cosine is only
                    # sound while the drift angle stays below the bound
                    # angle (p >= u); past that the center may have rotated
                    # onto the point and the bound must collapse to 1
                    pb = p[np.newaxis, :]
                    u_m = np.where(
                        u_m <= pb, geometry.update_upper_bound(u_m, pb), 1.0
                    )
                else:
                    order = np.argsort(p, kind="stable")
                    owner = int(order[0])
                    p_min = p[owner]
                    p_min2 = p[int(order[1])] if k > 1 else 1.0
                    worst = np.where(a == owner, p_min2, p_min)
                    if hamerly_update == "safe":
                        # the dropped u*p'' factor only dominates for
                        # u >= 0 and nonnegative drifts; outside that
                        # regime collapse to 1 (no pruning, still exact)
                        u = np.where(
                            (u >= 0.0) & (worst >= 0.0),
                            geometry.hamerly_upper_update(u, worst),
                            1.0,
                        )
                    else:
                        # deliberately unsound: the per-cluster update fed
                        # a single worst drift, kept for the regression
                        # harness only
                        u = geometry.update_upper_bound(u, worst)
                if debug_hook is not None:
                    debug_hook(
                        it,
                        BoundsState(variant=variant, a=a, l=l, u_matrix=u_m, u=u),
                        cents,
                    )
                if elkan_family:
                    sim_count = int(kernels.elkan_scan(
                        indptr, indices, values, cents.centers,
                        a, l, u_m, cc, s_arr, variant == "elkan",
                    ))
                else:
                    sim_count = int(kernels.hamerly_scan(
                        indptr, indices, values, cents.centers,
                        a, l, u, s_arr, variant == "hamerly",
                    ))
            reassignments = int(np.count_nonzero(a != a_prev))
            update_centers(data, a, cents, prev_assignments=a_prev)

        if it % _SCRATCH_INTERVAL == 0:
            cents.sums, cents.counts = _aggregate_sums(data, a, k)

        objective = float(np.einsum("ij,ij->", cents.sums, cents.centers))
        stats.append(IterationStats(
            iteration=it,
            sim_count=sim_count,
            cc_sim_count=cc_count,
            reassignments=reassignments,
            objective=objective,
            elapsed_ns=time.monotonic_ns() - t0,
        ))
        if k == 1 or np.all(cents.drift == 1.0) or (it >= 2 and reassignments == 0):
            converged = True
            break

    cents.sums, cents.counts = _aggregate_sums(data, a, k)
    return ClusteringResult(
        assignments=a,
        centers=cents,
        objective=stats[-1].objective,
        iterations=stats,
        converged=converged,
    )
