"""
Four-term relations on class functions of S_n:

    F(sigma) + F(sigma (i p)) + F(sigma (q n)) + F(sigma (i p)(q n)) = 0

for all sigma and pairwise distinct i, p, q, n. Relations are indexed 1-based like the
transpositions they name; permutations stay 0-based internally.
"""
import logging
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from config_file import settings
from src.arith.matrix import ExactMatrix, kernel_basis
from src.arith.scalars import QQ
from src.errors import InvalidInputError, UnsupportedSizeError
from src.rep.characters import character
from src.rep.partitions import (
    CycleType,
    Partition,
    class_representative,
    compose,
    cycle_type,
    make_partition,
    partitions_of,
    transposition,
)

logger = logging.getLogger(__name__)


def _check_size(n: int):
    if n < 4:
        raise UnsupportedSizeError(f"Four-term relations need four distinct indices, n = {n} is too small")
    if n > settings.max_expansion_n:
        raise UnsupportedSizeError(f"Exhaustive relation checks are capped at n = {settings.max_expansion_n}")


def _coset_types(sigma: Sequence[int], a: int, b: int, c: int, e: int) -> tuple[CycleType, ...]:
    n = len(sigma)
    first, second = transposition(n, a, b), transposition(n, c, e)
    return (
        cycle_type(sigma),
        cycle_type(compose(sigma, first)),
        cycle_type(compose(sigma, second)),
        cycle_type(compose(sigma, compose(first, second))),
    )


def four_term_sum(lam: Partition, sigma: Sequence[int], i: int, p: int, q: int) -> int:
    """
    The four_term_sum function returns the sum of chi_lambda over the coset sigma <(i p), (q n)>.

    :param lam: Partition: lambda with |lambda| = n
    :param sigma: Sequence[int]: 0-based permutation of range(n)
    :param i: int: 1-based index
    :param p: int: 1-based index
    :param q: int: 1-based index; i, p, q and n pairwise distinct
    :return: chi(sigma) + chi(sigma (i p)) + chi(sigma (q n)) + chi(sigma (i p)(q n))
    :raises InvalidInputError: Index clash or out of range
    """
    lam = make_partition(lam)
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise InvalidInputError(f"{tuple(sigma)} is not a permutation of 0..{n - 1}")
    if sum(lam) != n:
        raise InvalidInputError(f"Partition of {sum(lam)} does not match S_{n}")
    indices = (i, p, q, n)
    if len(set(indices)) != 4 or not all(1 <= x <= n for x in indices):
        raise InvalidInputError(f"Indices {indices} must be pairwise distinct in 1..{n}")
    return sum(character(lam, mu) for mu in _coset_types(sigma, i - 1, p - 1, q - 1, n - 1))


@lru_cache(maxsize=None)
def relation_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """
    Distinct relations as coefficient rows over partitions_of(n). Conjugating sigma moves the
    indices along, so class representatives with every ordered four-tuple cover all sigma.
    """
    _check_size(n)
    classes = partitions_of(n)
    position = {mu: index for index, mu in enumerate(classes)}
    rows = set()
    for mu in classes:
        sigma = class_representative(mu)
        for a, b, c, e in permutations(range(n), 4):
            row = [0] * len(classes)
            for nu in _coset_types(sigma, a, b, c, e):
                row[position[nu]] += 1
            rows.add(tuple(row))
    logger.debug("n = %d: %d distinct four-term relations", n, len(rows))
    return tuple(sorted(rows))


def classify_partitions(n: int) -> set[Partition]:
    """
    The classify_partitions function returns the partitions lambda of n whose characters
    satisfy every four-term relation.

    :param n: int: n >= 4
    :return: The set of admissible lambda; {1^n, 21^(n-2)} is expected
    :raises UnsupportedSizeError: n < 4
    """
    rows = relation_rows(n)
    classes = partitions_of(n)
    result = set()
    for lam in classes:
        values = [character(lam, mu) for mu in classes]
        if all(sum(c * v for c, v in zip(row, values)) == 0 for row in rows):
            result.add(lam)
    return result


def class_function_solutions(n: int) -> ExactMatrix:
    """Basis (as columns over partitions_of(n)) of the class functions satisfying every relation."""
    rows = relation_rows(n)
    return kernel_basis(ExactMatrix(rows, QQ, ncols=len(partitions_of(n))))


def class_function_space_dim(n: int) -> int:
    return class_function_solutions(n).ncols


def named_relations(n: int) -> list[dict[CycleType, int]]:
    """
    Three consequences of the four-term relations, as coefficient maps:
    2F(31^(n-3)) + F(41^(n-4)) + F(21^(n-2)) = 0, F(41^(n-4)) + F(2^2 1^(n-4)) = 0 and
    F(2^2 1^(n-4)) + 2F(21^(n-2)) + F(1^n) = 0.
    """
    _check_size(n)
    three = make_partition([3] + [1] * (n - 3))
    four = make_partition([4] + [1] * (n - 4))
    two = make_partition([2] + [1] * (n - 2))
    two_two = make_partition([2, 2] + [1] * (n - 4))
    identity = (1,) * n
    return [
        {three: 2, four: 1, two: 1},
        {four: 1, two_two: 1},
        {two_two: 1, two: 2, identity: 1},
    ]


def named_relations_hold(n: int) -> bool:
    """True iff every solution of the relation system satisfies the named relations."""
    classes = partitions_of(n)
    position = {mu: index for index, mu in enumerate(classes)}
    solutions = class_function_solutions(n)
    for column in solutions.columns():
        for relation in named_relations(n):
            if sum(column[position[mu]] * c for mu, c in relation.items()) != 0:
                return False
    return True
