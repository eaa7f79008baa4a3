"""Deterministic splitmix64 stream.

Every randomized routine in the package draws from this generator so that a
given seed reproduces the same objects on every platform.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 over a 64-bit state; the first output uses ``seed + GAMMA``."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_bit(self) -> int:
        # one output per bit, keeping only the most significant bit
        return self.next_u64() >> 63

    def bits(self, count: int) -> int:
        """Draw ``count`` bits; the t-th draw becomes bit t of the result."""
        out = 0
        for t in range(count):
            if self.next_u64() >> 63:
                out |= 1 << t
        return out

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection on 64-bit outputs."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population, size: int) -> list:
        pool = list(population)
        self.shuffle(pool)
        return pool[:size]


def substream(seed: int, index: int) -> SplitMix64:
    """Independent stream for trial ``index``: splitmix64 seeded with seed XOR index."""
    return SplitMix64((seed ^ index) & MASK64)
