"""Platform-independent seeded randomness for property checks.

A splitmix64 stream: same seed gives the same matrices on every platform
and numpy build, so verification reports are byte-reproducible.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator (public-domain constants)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def complex_matrix(self, n: int) -> np.ndarray:
        """n x n matrix with entries uniform in the complex unit square."""
        m = np.empty((n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                re = self.uniform()
                im = self.uniform()
                m[i, j] = complex(re, im)
        return m

    def hermitian_matrix(self, n: int) -> np.ndarray:
        a = self.complex_matrix(n)
        return 0.5 * (a + a.conj().T)
