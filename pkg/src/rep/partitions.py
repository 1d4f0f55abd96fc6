"""
Integer partitions as weakly decreasing tuples of positive parts. The same type labels
irreducible characters (lambda) and conjugacy classes of S_n (cycle types mu).

Permutations are 0-based tuples of images: sigma[i] = sigma(i).
"""
from collections import Counter
from math import factorial, prod
from typing import Iterable, Sequence

from sympy.utilities.iterables import partitions as sympy_partitions

from src.errors import InvalidInputError

Partition = tuple[int, ...]
CycleType = Partition
Permutation = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    parts = list(parts)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        raise InvalidInputError(f"Partition parts must be positive integers, got {parts}")
    return tuple(sorted(parts, reverse=True))


def parse_partition(text: str) -> Partition:
    """'2,1,1' -> (2, 1, 1)."""
    try:
        return make_partition(int(part) for part in text.replace(' ', '').split(',') if part)
    except ValueError:
        raise InvalidInputError(f"Cannot read a partition from '{text}'")


def partition_label(partition: Partition) -> str:
    """(2, 1, 1, 1) -> '21^3', (1, 1, 1) -> '1^3'."""
    counts = Counter(partition)
    return ''.join(str(p) if counts[p] == 1 else f"{p}^{counts[p]}" for p in sorted(counts, reverse=True))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise InvalidInputError(f"Cannot partition {n}")
    if n == 0:
        return [()]
    result = [make_partition(p for p, m in parts.items() for _ in range(m)) for parts in sympy_partitions(n)]
    return sorted(result, reverse=True)


def conjugate(partition: Partition) -> Partition:
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > i) for i in range(partition[0]))


def cycle_type(permutation: Sequence[int]) -> CycleType:
    n = len(permutation)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = permutation[i]
            length += 1
        lengths.append(length)
    return make_partition(lengths)


def class_representative(mu: CycleType) -> Permutation:
    """The permutation whose cycles are runs of consecutive points of lengths mu."""
    images = []
    start = 0
    for length in mu:
        images.extend(start + (i + 1) % length for i in range(length))
        start += length
    return tuple(images)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t] for t in tau)


def transposition(n: int, a: int, b: int) -> Permutation:
    images = list(range(n))
    images[a], images[b] = b, a
    return tuple(images)


def sign(mu: CycleType) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def centralizer_size(mu: CycleType) -> int:
    """z_mu = prod_i i^(m_i) m_i!, the order of the centralizer of a permutation of type mu."""
    counts = Counter(mu)
    return prod(i ** m * factorial(m) for i, m in counts.items())
