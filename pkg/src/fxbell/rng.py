"""Deterministic 64-bit pseudo-random generator (splitmix64).

Synthetic experiments must be reproducible bit-for-bit across platforms and
languages, which rules out library generators whose streams are not pinned.
splitmix64 fits: the state advances by a fixed odd constant and each output
is a stateless shift/multiply mix of the state, so the n-th draw can be
produced either one call at a time or as a vectorized block, with identical
results.

Constants are the widely published ones: the golden-ratio increment
0x9E3779B97F4A7C15 and the two finalizer multipliers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# 2**-53, converts the top 53 bits of a u64 into a float in [0, 1)
_FLOAT_SCALE = 1.0 / (1 << 53)


class SplitMix64:
    """Seedable stream of 64-bit words and [0,1) floats.

    Scalar calls and block calls draw from the same stream: after
    ``u64_block(n)`` the next ``next_u64()`` returns what element ``n`` of a
    block of ``n + 1`` would have been.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    @property
    def state(self) -> int:
        return self._state

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * _FLOAT_SCALE

    def u64_block(self, n: int) -> np.ndarray:
        """Next ``n`` outputs as a uint64 array (state advances by ``n``)."""
        if n < 0:
            raise ValueError("block size must be nonnegative")
        start = np.uint64(self._state)
        steps = np.arange(1, n + 1, dtype=np.uint64)
        z = start + steps * np.uint64(_GAMMA)  # wraps mod 2**64
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        z = z ^ (z >> np.uint64(31))
        self._state = (self._state + n * _GAMMA) & _MASK64
        return z

    def float_block(self, n: int) -> np.ndarray:
        """Next ``n`` outputs as float64 in [0, 1)."""
        return (self.u64_block(n) >> np.uint64(11)).astype(np.float64) * _FLOAT_SCALE
