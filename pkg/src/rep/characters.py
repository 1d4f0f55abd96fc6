from functools import lru_cache

from src.errors import InvalidInputError
from src.rep.partitions import CycleType, Partition, make_partition


def _beta_set(shape: Partition) -> tuple[int, ...]:
    length = len(shape)
    return tuple(part + length - 1 - i for i, part in enumerate(shape))


def _shape_of(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(p for p in (b - (length - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def _murnaghan_nakayama(shape: Partition, cycles: CycleType) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta_set(shape)
    members = set(beta)
    total = 0
    for b in beta:
        lowered = b - r
        if lowered < 0 or lowered in members:
            continue
        # leg length of the removed rim hook
        height = sum(1 for c in beta if lowered < c < b)
        smaller = _shape_of([lowered if c == b else c for c in beta])
        value = _murnaghan_nakayama(smaller, rest)
        total += -value if height % 2 else value
    return total


def character(lam: Partition, mu: CycleType) -> int:
    """
    The character function returns chi_lambda on the class of cycle type mu, by the
    Murnaghan-Nakayama rule: rim hooks of length mu_1 are stripped through the beta-set of
    lambda, with sign (-1)^(leg length), recursing on the remaining cycles.

    :param lam: Partition: lambda, the irreducible representation
    :param mu: CycleType: The conjugacy class
    :return: The integer chi_lambda(mu)
    :raises InvalidInputError: |lambda| != |mu|
    """
    lam, mu = make_partition(lam), make_partition(mu)
    if sum(lam) != sum(mu):
        raise InvalidInputError(f"Sizes differ: |lambda| = {sum(lam)}, |mu| = {sum(mu)}")
    return _murnaghan_nakayama(lam, mu)


def dimension(lam: Partition) -> int:
    return character(lam, (1,) * sum(lam))
