"""Portable 64-bit generator so layouts reproduce bit for bit on any platform.

State update is xorshift64* (Vigna 2014)::

    x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27
    out = (x * 0x2545F4914F6CDD1D) mod 2**64

The seed is expanded with one splitmix64 round (increment 0x9E3779B97F4A7C15,
multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31), so
seed 0 is valid. A zero state after mixing is replaced by the increment.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MULTIPLIER = 0x2545F4914F6CDD1D


def splitmix64(value: int) -> int:
    z = (value + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self._state = splitmix64(seed) or GOLDEN

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self._state = x
        return (x * MULTIPLIER) & MASK64

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via the high half of a 64x64 product."""
        if n <= 0:
            raise ValueError("upper bound must be positive")
        return (self.next_u64() * n) >> 64

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))
