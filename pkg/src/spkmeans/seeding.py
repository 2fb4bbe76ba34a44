"""Cluster-center seeding: uniform, spherical k-means++, and AFK-MC2.

All methods draw from the portable splitmix64 generator so a (method,
alpha, chain_length, seed) tuple reproduces the same centers everywhere.
Dissimilarity uses the offset form alpha - <x, c>; alpha = 1 is the plain
cosine complement, alpha = 1.5 is the metric variant. Chosen points get
weight zero so one seeding never emits duplicate row indices. Centers are
densified copies of data rows, so later center moves never touch the data.
"""

import bisect
from dataclasses import dataclass

import numpy as np

from .engine import CentroidSet
from .errors import ConfigError, InfeasibleError
from .rng import PortableRng
from .sparse import Dataset, dot_sparse_dense

METHODS = ("uniform", "kmpp", "afkmc2")


@dataclass
class SeedConfig:
    method: str = "uniform"
    alpha: float = 1.0
    chain_length: int = 200
    seed: int = 0

    def validate(self):
        if self.method not in METHODS:
            raise ConfigError(f"unknown init method {self.method!r}")
        if not 1.0 <= self.alpha <= 2.0:
            raise ConfigError(f"alpha must be in [1, 2], got {self.alpha}")
        if self.chain_length < 1:
            raise ConfigError(f"chain_length must be >= 1, got {self.chain_length}")


def _check_k(data: Dataset, k: int):
    if not 1 <= k <= data.n:
        raise InfeasibleError(f"k={k} infeasible for n={data.n}")


def _sims_to_center(data: Dataset, c: np.ndarray) -> np.ndarray:
    # per-row merge dots (not a matrix product) so from-scratch oracle
    # recomputation reproduces the exact same floats
    return np.array([dot_sparse_dense(r, c) for r in data.rows])


def _uniform_among_unchosen(rng: PortableRng, n: int, chosen: list[int]) -> int:
    remaining = sorted(set(range(n)) - set(chosen))
    return remaining[rng.randint(len(remaining))]


def init_uniform(data: Dataset, k: int, seed: int) -> CentroidSet:
    """k distinct rows chosen uniformly without replacement."""
    _check_k(data, k)
    rng = PortableRng(seed)
    idx = rng.sample_without_replacement(data.n, k)
    return CentroidSet.from_data_rows(data, idx)


def init_kmpp(data: Dataset, k: int, alpha: float, seed: int,
              trace: list | None = None) -> CentroidSet:
    """Spherical k-means++: each next center sampled with probability
    proportional to alpha - (best similarity to the centers so far).

    The per-point running maximum is cached, so the whole seeding costs
    O(n*k) dot products. ``trace``, if given, collects the weight vector
    used at each pick (for from-scratch verification).
    """
    _check_k(data, k)
    rng = PortableRng(seed)
    n = data.n
    chosen = [rng.randint(n)]
    maxsim = _sims_to_center(data, data.rows[chosen[0]].densify(data.dim))
    for _ in range(1, k):
        w = np.maximum(alpha - maxsim, 0.0)
        w[chosen] = 0.0
        if trace is not None:
            trace.append(w.copy())
        if float(w.sum()) <= 0.0:
            pick = _uniform_among_unchosen(rng, n, chosen)
        else:
            pick = rng.weighted_index(w)
        chosen.append(pick)
        sims = _sims_to_center(data, data.rows[pick].densify(data.dim))
        np.maximum(maxsim, sims, out=maxsim)
    return CentroidSet.from_data_rows(data, chosen)


def init_afkmc2(data: Dataset, k: int, alpha: float, chain_length: int,
                seed: int) -> CentroidSet:
    """Markov-chain approximation of the k-means++ seeding.

    The first center is uniform. The proposal distribution, built once, is
    q(i) = d(i) / (2 * sum d) + 1 / (2n) with d(i) = alpha - <x(i), c1>.
    Each further center is the end state of a Metropolis-Hastings chain of
    ``chain_length`` proposals from q, accepting candidate y over state x
    with probability min(1, dcur(y) q(x) / (dcur(x) q(y))) where dcur is
    the dissimilarity to the centers chosen so far. A zero-dissimilarity
    end state (already-chosen point) is replaced by a direct draw
    proportional to dcur so no duplicate index is ever emitted.
    """
    _check_k(data, k)
    rng = PortableRng(seed)
    n = data.n
    first = rng.randint(n)
    chosen = [first]
    sims = _sims_to_center(data, data.rows[first].densify(data.dim))
    d = np.maximum(alpha - sims, 0.0)
    d[first] = 0.0
    total_d = float(d.sum())
    if total_d > 0.0:
        q = d / (2.0 * total_d) + 0.5 / n
    else:
        q = np.full(n, 1.0 / n)
    qlist = q.tolist()
    cumq = np.cumsum(q).tolist()
    qtotal = cumq[-1]
    dcur = d.copy()

    for _ in range(1, k):
        dlist = dcur.tolist()
        if float(dcur.sum()) <= 0.0:
            cur = _uniform_among_unchosen(rng, n, chosen)
        else:
            r = rng.random() * qtotal
            cur = min(bisect.bisect_right(cumq, r), n - 1)
            for _step in range(1, chain_length):
                r = rng.random() * qtotal
                cand = min(bisect.bisect_right(cumq, r), n - 1)
                num = dlist[cand] * qlist[cur]
                den = dlist[cur] * qlist[cand]
                if den <= 0.0:
                    cur = cand
                elif rng.random() * den < num:
                    cur = cand
            if dlist[cur] <= 0.0:
                cur = rng.weighted_index(dcur)
        chosen.append(cur)
        sims = _sims_to_center(data, data.rows[cur].densify(data.dim))
        np.minimum(dcur, np.maximum(alpha - sims, 0.0), out=dcur)
        dcur[cur] = 0.0
    return CentroidSet.from_data_rows(data, chosen)


def make_centroids(data: Dataset, k: int, cfg: SeedConfig) -> CentroidSet:
    cfg.validate()
    if cfg.method == "uniform":
        return init_uniform(data, k, cfg.seed)
    if cfg.method == "kmpp":
        return init_kmpp(data, k, cfg.alpha, cfg.seed)
    return init_afkmc2(data, k, cfg.alpha, cfg.chain_length, cfg.seed)
