"""
Polynomials on W = M_n, flattened row-major: the entry x_ij is the variable x{i*n + j}.
"""
from dataclasses import dataclass
from itertools import permutations
from math import isqrt
from typing import Sequence

from config_file import settings
from src.arith.matrix import ExactMatrix
from src.arith.scalars import QQ, Field
from src.errors import InvalidInputError, UnsupportedSizeError
from src.poly.multipoly import MultiPoly
from src.rep.characters import character
from src.rep.partitions import Partition, cycle_type, make_partition

FLATTENING = 'row-major'


@dataclass(frozen=True)
class MatrixSpacePoly:
    n: int
    poly: MultiPoly
    name: str = ''
    flattening: str = FLATTENING

    def __post_init__(self):
        if self.poly.nvars != self.n * self.n:
            raise InvalidInputError(f"A polynomial on M_{self.n} needs {self.n * self.n} variables")

    @property
    def degree(self) -> int:
        return self.poly.degree


def variable_index(i: int, j: int, n: int) -> int:
    return i * n + j


def matrix_size(nvars: int) -> int:
    """n with n^2 = nvars."""
    n = isqrt(nvars)
    if n * n != nvars:
        raise InvalidInputError(f"{nvars} variables do not form a square matrix space")
    return n


def flatten(matrix: ExactMatrix) -> list:
    return [value for row in matrix.rows for value in row]


def unflatten(vector: Sequence, field: Field) -> ExactMatrix:
    n = matrix_size(len(vector))
    return ExactMatrix([list(vector[i * n:(i + 1) * n]) for i in range(n)], field)


def variable_matrix(n: int, field: Field = QQ) -> list[list[MultiPoly]]:
    """The generic matrix (x_ij) as linear forms."""
    return [[MultiPoly.variable(variable_index(i, j, n), n * n, field) for j in range(n)] for i in range(n)]


def immanant_poly(lam: Partition) -> MatrixSpacePoly:
    """
    The immanant_poly function expands IM_lambda = sum_sigma chi_lambda(sigma) prod x_{i sigma(i)}.

    :param lam: Partition: lambda of n, n <= settings.max_expansion_n
    :return: MatrixSpacePoly with one term per permutation of nonzero character
    :raises UnsupportedSizeError: n exceeds the expansion cap
    """
    lam = make_partition(lam)
    n = sum(lam)
    if n < 1:
        raise InvalidInputError("Immanants need n >= 1")
    if n > settings.max_expansion_n:
        raise UnsupportedSizeError(f"Full expansion is capped at n = {settings.max_expansion_n}")
    characters: dict[Partition, int] = {}
    terms = {}
    for sigma in permutations(range(n)):
        mu = cycle_type(sigma)
        if mu not in characters:
            characters[mu] = character(lam, mu)
        exponents = [0] * (n * n)
        for i in range(n):
            exponents[variable_index(i, sigma[i], n)] = 1
        terms[tuple(exponents)] = characters[mu]
    label = ','.join(map(str, lam))
    return MatrixSpacePoly(n, MultiPoly(n * n, terms, QQ), f"immanant:{label}")


def det_poly(n: int) -> MatrixSpacePoly:
    result = immanant_poly((1,) * n)
    return MatrixSpacePoly(n, result.poly, f"det:{n}")


def perm_poly(n: int) -> MatrixSpacePoly:
    result = immanant_poly((n,))
    return MatrixSpacePoly(n, result.poly, f"perm:{n}")
