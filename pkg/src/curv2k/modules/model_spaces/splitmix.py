"""
🎲 SPLITMIX64 - Counter-based 64-bit generator for portable tensor corpora

value_k = mix(seed + (k + 1) * 0x9E3779B97F4A7C15)   (mod 2^64), k = 0, 1, 2, ...

mix(z):
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

Floats in [0, 1) take the top 53 bits: (value >> 11) * 2^-53. Any language with
64-bit unsigned arithmetic reproduces the same stream.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX_MULTIPLIER_1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_MULTIPLIER_2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.counter = 0

    def next_uint64(self) -> int:
        self.counter += 1
        return mix64(self.seed + self.counter * GOLDEN_GAMMA)

    def uniform(self) -> float:
        """Float in [0, 1)."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def uniforms(self, count: int, low: float = 0.0, high: float = 1.0) -> np.ndarray:
        return np.array([low + (high - low) * self.uniform() for _ in range(count)])
