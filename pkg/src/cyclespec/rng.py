"""Deterministic random streams.

splitmix64 over an additive counter: draw t of a stream seeded s is
finalize(s + (t + 1) * GAMMA), so a stream can be advanced one value at a
time in Python or a whole block at a time in numpy and produce identical
sequences. All generator randomness flows through this module; nothing
else in the package draws random numbers.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def _finalize(z: int) -> int:
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def _finalize_block(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


class Stream:
    """A splitmix64 counter stream with scalar and block draws."""

    __slots__ = ("_seed", "_count")

    def __init__(self, seed: int):
        self._seed = seed & MASK64
        self._count = 0

    def child(self, tag: int) -> "Stream":
        """Independent stream derived from this stream's seed and an integer tag."""
        return Stream(_finalize(self._seed ^ _finalize(((tag + 1) * GAMMA) & MASK64)))

    def next_u64(self) -> int:
        self._count += 1
        return _finalize((self._seed + self._count * GAMMA) & MASK64)

    def below(self, n: int) -> int:
        """Next draw reduced to [0, n)."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return self.next_u64() % n

    def block(self, k: int) -> np.ndarray:
        """Next k draws as a uint64 array (same values as k next_u64 calls)."""
        t = np.arange(self._count + 1, self._count + k + 1, dtype=np.uint64)
        self._count += k
        with np.errstate(over="ignore"):
            return _finalize_block(np.uint64(self._seed) + t * np.uint64(GAMMA))

    def bernoulli_block(self, k: int, p) -> np.ndarray:
        """Boolean array of k independent trials with success probability p.

        p may be a float or an exact Fraction; the acceptance threshold is
        computed in integer arithmetic either way."""
        threshold = min(max(int(Fraction(p) * (1 << 64)), 0), 1 << 64)
        if threshold == 1 << 64:
            self._count += k
            return np.ones(k, dtype=bool)
        return self.block(k) < np.uint64(threshold)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
