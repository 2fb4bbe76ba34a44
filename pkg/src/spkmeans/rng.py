"""Portable deterministic pseudo-random generator.

Seeded runs must reproduce bit-identically across platforms and across
reimplementations in other languages, so the generator algorithm is pinned
here instead of relying on library defaults. We use splitmix64; the full
state is one 64-bit integer and the transition is (all arithmetic mod 2^64):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

Derived draws are defined on top of the raw 64-bit stream:

* ``random()``  -> float in [0, 1): top 53 bits times 2^-53.
* ``randint(n)`` -> ``next_uint64() % n`` (modulo; the tiny bias is
  irrelevant here, determinism is what matters).
* ``sample_without_replacement(n, k)`` -> rejection sampling on
  ``randint(n)`` when k << n, else a partial Fisher-Yates shuffle.
"""

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class PortableRng:
    """splitmix64 generator with a documented, language-independent stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_uint64() >> 11) * 2.0**-53

    def randint(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_uint64() % bound

    def sample_without_replacement(self, n: int, k: int) -> list[int]:
        """k distinct integers from range(n), in draw order."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot draw {k} distinct values from {n}")
        if 2 * k < n:
            seen: set[int] = set()
            out: list[int] = []
            while len(out) < k:
                v = self.randint(n)
                if v not in seen:
                    seen.add(v)
                    out.append(v)
            return out
        pool = list(range(n))
        out = []
        for i in range(k):
            j = i + self.randint(n - i)
            pool[i], pool[j] = pool[j], pool[i]
            out.append(pool[i])
        return out

    def weighted_index(self, weights: np.ndarray) -> int:
        """Index drawn proportional to non-negative weights.

        Draws one uniform variate and inverts the cumulative sum; lands on
        the first index whose cumulative weight exceeds r, skipping
        zero-weight cells at floating-point edges.
        """
        cum = np.cumsum(weights)
        total = float(cum[-1])
        if total <= 0.0:
            raise ValueError("total weight must be positive")
        r = self.random() * total
        idx = int(np.searchsorted(cum, r, side="right"))
        idx = min(idx, len(weights) - 1)
        while weights[idx] == 0.0 and idx + 1 < len(weights):
            idx += 1
        return idx
