"""Seeded 64-bit generator used by every randomized routine.

The update rule is splitmix64, fixed here so that generated instances are
reproducible from (params, seed) alone, independent of platform:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output z xor (z >> 31)

Bounded draws use the multiply-high reduction (x * m) >> 64, which is
bias-negligible at the ranges used here and avoids rejection loops.
"""

from __future__ import annotations

from fractions import Fraction

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic stream of 64-bit values from a single seed."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform-ish draw in [0, m)."""
        if m <= 0:
            raise ValueError("below() needs m >= 1")
        return (self.next_u64() * m) >> 64

    def chance(self, p: Fraction) -> bool:
        """True with probability p (exact rational threshold)."""
        return self.below(p.denominator) < p.numerator

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
