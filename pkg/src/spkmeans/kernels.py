"""Numba scan kernels for the accelerated assignment phase.

The kernels operate on the dataset's CSR arrays and a dense center matrix,
mutate the assignment/bound arrays in place, and return the number of
point-center similarity evaluations they performed. They contain only the
pruning logic; bound drift updates, center maintenance, and instrumentation
live in :mod:`spkmeans.engine`.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _dot_row(indptr, indices, data, i, c):
    s = 0.0
    for t in range(indptr[i], indptr[i + 1]):
        s += data[t] * c[indices[t]]
    return s


@njit(cache=True)
def elkan_scan(indptr, indices, data, C, a, l, u, cc, s_arr, use_cc):
    """Per-cluster-bound scan (Elkan family).

    u is the n x k upper-bound matrix. With use_cc the center-center
    thresholds prune whole points (s) and single clusters (cc); both are
    only valid for l >= 0. Skipped similarity: u(i,j) <= l(i). On a failed
    test l is tightened once per point before any cross-cluster similarity
    is spent.
    """
    n = a.shape[0]
    k = C.shape[0]
    sims = 0
    for i in range(n):
        ai = a[i]
        li = l[i]
        if use_cc and li >= 0.0 and s_arr[ai] <= li:
            continue
        tightened = False
        for j in range(k):
            if j == ai:
                continue
            if use_cc and li >= 0.0 and cc[ai, j] <= li:
                continue
            if u[i, j] <= li:
                continue
            if not tightened:
                li = _dot_row(indptr, indices, data, i, C[ai])
                sims += 1
                l[i] = li
                u[i, ai] = li
                tightened = True
                if use_cc and li >= 0.0 and cc[ai, j] <= li:
                    continue
                if u[i, j] <= li:
                    continue
            sij = _dot_row(indptr, indices, data, i, C[j])
            sims += 1
            u[i, j] = sij
            if sij > li:
                ai = j
                li = sij
                a[i] = j
                l[i] = sij
    return sims


@njit(cache=True)
def hamerly_scan(indptr, indices, data, C, a, l, u, s_arr, use_s):
    """Single-bound scan (Hamerly family).

    u(i) bounds the best similarity among non-assigned centers. When the
    prune fails even after tightening l, all other similarities are
    computed, u is reset to the exact second-best, and the point is
    reassigned if a strictly better center exists.
    """
    n = a.shape[0]
    k = C.shape[0]
    sims = 0
    for i in range(n):
        ai = a[i]
        li = l[i]
        if use_s and li >= 0.0 and s_arr[ai] <= li:
            continue
        if u[i] <= li:
            continue
        li = _dot_row(indptr, indices, data, i, C[ai])
        sims += 1
        l[i] = li
        if use_s and li >= 0.0 and s_arr[ai] <= li:
            continue
        if u[i] <= li:
            continue
        best = li
        best_j = ai
        second = -2.0
        for j in range(k):
            if j == ai:
                continue
            sij = _dot_row(indptr, indices, data, i, C[j])
            sims += 1
            if sij > best:
                second = best
                best = sij
                best_j = j
            elif sij > second:
                second = sij
        if best_j != ai:
            a[i] = best_j
            l[i] = best
        u[i] = second
    return sims
