"""Cosine triangle-inequality bounds.

Everything here operates on cosines of angles directly, never on the
angles, so no trigonometric calls appear on any hot path. For unit vectors
x, z, y with a = cos(x,z) and b = cos(z,y):

    a*b - sqrt((1-a^2)(1-b^2))  <=  cos(x,y)  <=  a*b + sqrt((1-a^2)(1-b^2))

The same arithmetic maintains the per-point bounds across center drift
p(j) = <c(j), c'(j)>. All sqrt arguments are clamped at 0 and all outputs
clamped to [-1, 1]; floating-point drift can push squares fractionally
above 1 and downstream comparisons must never see out-of-range cosines.

Functions accept scalars or ndarrays (broadcasting applies).
"""

import numpy as np


def clamp_cos(t):
    """Clamp a cosine-valued quantity into [-1, 1]."""
    return np.clip(t, -1.0, 1.0)


def _sin(t):
    # sin of the angle whose cosine is t; argument clamped against fp drift
    return np.sqrt(np.maximum(0.0, 1.0 - t * t))


def cos_lower_bound(a, b):
    """Lower bound on cos(x,y) given a = cos(x,z), b = cos(z,y)."""
    return clamp_cos(a * b - _sin(a) * _sin(b))


def cos_upper_bound(a, b):
    """Upper bound on cos(x,y) given a = cos(x,z), b = cos(z,y)."""
    return clamp_cos(a * b + _sin(a) * _sin(b))


def update_lower_bound(l, p):
    """Drift update for the lower bound to the assigned center.

    Same arithmetic as :func:`cos_lower_bound`; named separately because
    the arguments carry l(i) / p(a(i)) semantics on the engine side.
    """
    return cos_lower_bound(l, p)


def update_upper_bound(u, p):
    """Drift update for a per-cluster upper bound u(i,j) with p(j)."""
    return cos_upper_bound(u, p)


def hamerly_upper_update(u, p_min):
    """Single-bound drift update against the worst applicable drift.

    ``u + sqrt((1-u^2)(1-p_min^2))``, clamped. The per-cluster update is
    not minimized by the smallest p(j) (the square-root term grows as p
    shrinks, so a large-drift cluster can matter more for small u); this
    form provably dominates every per-cluster update with p(j) >= p_min,
    at the price of dropping the u*p factor.
    """
    return clamp_cos(u + _sin(u) * _sin(p_min))


def half_angle_cc(s):
    """Cosine of half the angle whose cosine is s: sqrt((s+1)/2)."""
    return np.sqrt(np.maximum(0.0, (s + 1.0) / 2.0))


def arccos_triangle_oracle(a, b):
    """Trigonometric reference for :func:`cos_lower_bound`.

    cos(arccos(a) + arccos(b)). Test surface only: arccos/cos cost far
    more than the algebraic form and conditioning degrades near |a|=1.
    """
    return np.cos(np.arccos(clamp_cos(a)) + np.arccos(clamp_cos(b)))
