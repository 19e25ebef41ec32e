"""Deterministic random streams for the instance generators.

All randomized generators draw from splitmix64 streams.  The k-th output
of a stream seeded with s is mix64(s + (k+1)*GOLDEN), a closed form that
lets large Bernoulli blocks be produced with vectorized numpy while the
scalar generator stays bit-identical.

Stream discipline: a generator with master seed s derives one sub-stream
per role via ``substream(s, i)``; frame edge draws use the frame index as
the role, auxiliary draws (subset choices, overlays) use documented role
indices past the frame range.  This keeps every frame independently
reproducible and lets frames be generated in any order or in parallel
without changing the output.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """splitmix64 finalizer: a 64-bit bijective mixer."""
    z &= MASK64
    z = (z ^ (z >> 30)) * _MIX1 & MASK64
    z = (z ^ (z >> 27)) * _MIX2 & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Scalar splitmix64 stream."""

    __slots__ = ("_state", "_drawn")

    def __init__(self, seed: int):
        self._state = seed & MASK64
        self._drawn = 0

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        self._drawn += 1
        return mix64(self._state)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (MASK64 + 1) - (MASK64 + 1) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def bernoulli(self, p: float) -> bool:
        """Coin with success probability p, via a 53-bit threshold compare."""
        return (self.next_u64() >> 11) < _threshold(p)

    def sample_without_replacement(self, n: int, m: int) -> list[int]:
        """m distinct values from range(n), ascending, by partial Fisher-Yates."""
        if not 0 <= m <= n:
            raise ValueError(f"cannot sample {m} from range({n})")
        pool = list(range(n))
        for i in range(m):
            j = i + self.next_below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:m])


def substream(seed: int, role: int) -> SplitMix64:
    """Independent stream for one role of a generator run."""
    return SplitMix64(mix64(seed) ^ mix64(role + 1))


def _threshold(p: float) -> int:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    return min(int(p * (1 << 53)), 1 << 53)


def stream_block(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs start..start+count-1 of SplitMix64(seed), as uint64.

    Matches the scalar stream exactly: stream_block(s, 0, k) equals the
    first k values of SplitMix64(s).next_u64().
    """
    idx = np.arange(start + 1, start + 1 + count, dtype=np.uint64)
    z = (np.uint64(seed & MASK64) + idx * np.uint64(GOLDEN))
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def bernoulli_block(stream: SplitMix64, count: int, p: float) -> np.ndarray:
    """count Bernoulli(p) draws from stream's current position (vectorized).

    Advances the scalar stream by count so interleaved scalar use stays
    consistent with one-at-a-time draws.
    """
    base_state = stream._state
    block = stream_block(base_state, 0, count)
    stream._state = (base_state + count * GOLDEN) & MASK64
    stream._drawn += count
    return (block >> np.uint64(11)) < np.uint64(_threshold(p))
