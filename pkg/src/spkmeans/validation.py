"""Independent oracles: brute-force assignment, bound audits, triangle fuzz.

Nothing here shares pruning code with the engine; the whole point is that
these paths recompute everything the slow, obvious way.
"""

from dataclasses import dataclass

import numpy as np

from . import engine, geometry
from .seeding import SeedConfig
from .sparse import Dataset

BOUND_TOL = 1e-9


def brute_force_assign(data: Dataset, centroids) -> np.ndarray:
    """Reference argmax assignment; ties resolve to the lowest index."""
    centers = (
        centroids.centers
        if isinstance(centroids, engine.CentroidSet)
        else np.asarray(centroids)
    )
    out = np.empty(data.n, dtype=np.int64)
    for i, row in enumerate(data.rows):
        sims = centers[:, row.indices] @ row.values
        out[i] = int(np.argmax(sims))
    return out


@dataclass
class AuditReport:
    max_lower_violation: float
    max_upper_violation: float
    decisions_audited: int
    passed: bool

    @classmethod
    def from_violations(cls, lower, upper, count):
        return cls(
            max_lower_violation=lower,
            max_upper_violation=upper,
            decisions_audited=count,
            passed=lower <= BOUND_TOL and upper <= BOUND_TOL,
        )


class _BoundAuditor:
    """Debug hook checking every maintained bound against exact similarities.

    Called pre-scan each iteration, when the bounds are exactly the values
    the pruning decisions will consult.
    """

    def __init__(self, data: Dataset):
        self.data = data
        self.max_lower = 0.0
        self.max_upper = 0.0
        self.count = 0

    def __call__(self, iteration, bounds, cents):
        S = np.asarray(self.data.matrix @ cents.centers.T)
        n = S.shape[0]
        exact_own = S[np.arange(n), bounds.a]
        self.max_lower = max(self.max_lower, float(np.max(bounds.l - exact_own)))
        self.count += n
        if bounds.u_matrix is not None:
            self.max_upper = max(
                self.max_upper, float(np.max(S - bounds.u_matrix))
            )
            self.count += S.size
        elif bounds.u is not None and S.shape[1] > 1:
            masked = S.copy()
            masked[np.arange(n), bounds.a] = -np.inf
            other_best = masked.max(axis=1)
            self.max_upper = max(
                self.max_upper, float(np.max(other_best - bounds.u))
            )
            self.count += n


def audit_bounds(data: Dataset, variant: str, k: int, seed: int,
                 init: str = "uniform", alpha: float = 1.0,
                 max_iter: int = 100,
                 hamerly_update: str = "safe") -> AuditReport:
    """Run a variant to convergence with exact recomputation at every
    pruning decision point; report the worst bound violations."""
    auditor = _BoundAuditor(data)
    engine.run(
        data, k, variant,
        SeedConfig(method=init, alpha=alpha, seed=seed),
        max_iter=max_iter,
        debug_hook=auditor,
        hamerly_update=hamerly_update,
    )
    return AuditReport.from_violations(
        auditor.max_lower, auditor.max_upper, auditor.count
    )


def fuzz_triangle(n_triples: int, dims: int, seed: int) -> bool:
    """Random unit triples: lower bound <= exact <= upper bound, with
    BOUND_TOL slack. Returns True when no violation is found."""
    gen = np.random.default_rng(seed)
    X = gen.normal(size=(n_triples, dims))
    Z = gen.normal(size=(n_triples, dims))
    Y = gen.normal(size=(n_triples, dims))
    for M in (X, Z, Y):
        M /= np.linalg.norm(M, axis=1, keepdims=True)
    a = np.einsum("ij,ij->i", X, Z)
    b = np.einsum("ij,ij->i", Z, Y)
    exact = np.einsum("ij,ij->i", X, Y)
    lower = geometry.cos_lower_bound(a, b)
    upper = geometry.cos_upper_bound(a, b)
    return bool(
        np.all(lower <= exact + BOUND_TOL) and np.all(upper >= exact - BOUND_TOL)
    )
