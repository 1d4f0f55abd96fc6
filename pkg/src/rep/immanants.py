from functools import reduce
from itertools import permutations
from operator import add, mul
from typing import Sequence

from config_file import settings
from src.errors import InvalidInputError, UnsupportedSizeError
from src.rep.characters import character
from src.rep.partitions import Partition, cycle_type, make_partition


def immanant(lam: Partition, matrix: Sequence[Sequence]):
    """
    The immanant function returns sum over sigma of chi_lambda(sigma) prod_i M[i][sigma(i)].

    Entries may be scalars or MultiPoly values; terms with a zero character are skipped.

    :param lam: Partition: lambda with |lambda| = n
    :param matrix: Sequence[Sequence]: n x n matrix
    :return: The immanant, of the entries' type
    :raises InvalidInputError: Size mismatch
    """
    lam = make_partition(lam)
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise InvalidInputError("Immanants are defined for square matrices")
    if sum(lam) != n:
        raise InvalidInputError(f"Partition of {sum(lam)} does not match a {n} x {n} matrix")
    if n > settings.max_expansion_n:
        raise UnsupportedSizeError(f"Immanant expansion is capped at n = {settings.max_expansion_n}")
    if n == 0:
        return 1
    characters: dict[Partition, int] = {}
    terms = []
    for sigma in permutations(range(n)):
        mu = cycle_type(sigma)
        if mu not in characters:
            characters[mu] = character(lam, mu)
        chi = characters[mu]
        if chi == 0:
            continue
        product = reduce(mul, (matrix[i][sigma[i]] for i in range(n)))
        terms.append(product * chi)
    if not terms:
        return matrix[0][0] * 0
    return reduce(add, terms)
