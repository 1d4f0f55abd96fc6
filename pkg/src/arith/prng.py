"""
Deterministic splitmix64 generator. Every randomized verdict of the package is a function
of (seed, prime, trial index): drivers never draw from ambient entropy, they split a
substream per trial instead.
"""
from typing import Sequence, TypeVar

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

T = TypeVar('T')


def mix64(value: int) -> int:
    z = value & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class Prng:
    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.position = 0

    def next_u64(self) -> int:
        self.position += 1
        return mix64(self.seed + self.position * GOLDEN_GAMMA)

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow needs a positive bound")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n

    def randint(self, low: int, high: int) -> int:
        return low + self.randbelow(high - low + 1)

    def choice(self, items: Sequence[T]) -> T:
        return items[self.randbelow(len(items))]

    def split(self, *labels: int) -> 'Prng':
        """
        The split function derives an independent substream.

        The child depends only on this generator's seed and the labels, never on how far
        the parent stream has advanced, so trial k of a run is reproducible on its own.

        :param labels: int: Substream indices, e.g. (prime, trial)
        :return: A fresh Prng
        """
        state = self.seed
        for label in labels:
            state = mix64(state ^ mix64((label + 1) * GOLDEN_GAMMA))
        return Prng(state)

    def __repr__(self):
        return f"Prng(seed={self.seed}, position={self.position})"
