"""
Pfaffians and the boundary polynomial P_Lambda of the determinant orbit closure.

For odd n, write M = A + S with A = (M - M^T)/2 skew and S = (M + M^T)/2 symmetric. Then
adj(A) = v v^T with v_i = (-1)^i Pf_i(A) (0-based), and

    det(A + tS) = n t det(A, ..., A, S) + O(t^2),
    P_Lambda = det(A, ..., A, S) = (1/n) sum_ij (-1)^(i+j) s_ij Pf_i(A) Pf_j(A).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from config_file import settings
from src.arith.matrix import ExactMatrix
from src.arith.scalars import QQ
from src.errors import InvalidInputError, UnsupportedSizeError
from src.models.matrix_space import MatrixSpacePoly, variable_index
from src.poly.multipoly import LinearSubstitution, MultiPoly, symbolic_det

logger = logging.getLogger(__name__)


def _check_skew(matrix: Sequence[Sequence]):
    n = len(matrix)
    for i in range(n):
        if len(matrix[i]) != n:
            raise InvalidInputError("Pfaffians are defined for square matrices")
        for j in range(i, n):
            if matrix[i][j] != -matrix[j][i]:
                raise InvalidInputError(f"Matrix is not skew-symmetric at ({i}, {j})")


def pfaffian(matrix: Sequence[Sequence], one=Fraction(1)):
    """
    The pfaffian function expands Pf(A) along the first row,
    Pf(A) = sum_j (-1)^(j+1) a_0j Pf(A without rows and columns 0, j), memoized on index sets.

    Pf([[0, a], [-a, 0]]) = a, the empty Pfaffian is one and odd sizes give zero.

    :param matrix: Sequence[Sequence]: Skew-symmetric matrix of scalars or polynomials
    :param one: The unit of the entries' ring, returned for the empty matrix
    :return: Pf(A)
    """
    n = len(matrix)
    zero = one * 0
    if n % 2:
        return zero
    memo: dict[tuple[int, ...], object] = {}

    def expand(indices: tuple[int, ...]):
        if not indices:
            return one
        if indices in memo:
            return memo[indices]
        first, rest = indices[0], indices[1:]
        total = zero
        for position, j in enumerate(rest):
            entry = matrix[first][j]
            if entry == 0 or (isinstance(entry, MultiPoly) and entry.is_zero()):
                continue
            term = entry * expand(rest[:position] + rest[position + 1:])
            total = total - term if position % 2 else total + term
        memo[indices] = total
        return total

    return expand(tuple(range(n)))


def pfaffian_minor(matrix: Sequence[Sequence], index: int, one=Fraction(1)):
    """
    The pfaffian_minor function returns Pf_i(A), the Pfaffian of A with row and column i deleted.

    :param matrix: Sequence[Sequence]: Skew-symmetric matrix of odd size
    :param index: int: 0-based i
    :param one: The unit of the entries' ring
    :return: Pf_i(A)
    :raises InvalidInputError: A is not skew-symmetric or has even size
    """
    _check_skew(matrix)
    n = len(matrix)
    if n % 2 == 0:
        raise InvalidInputError("Pfaffian minors are taken of odd-sized matrices")
    if not 0 <= index < n:
        raise InvalidInputError(f"Index {index} out of range for size {n}")
    keep = [i for i in range(n) if i != index]
    return pfaffian([[matrix[i][j] for j in keep] for i in keep], one)


@dataclass(frozen=True)
class SymSkewSplit:
    """A = (M - M^T)/2 and S = (M + M^T)/2 as linear substitutions on the n^2 coordinates."""
    n: int
    skew: LinearSubstitution
    symmetric: LinearSubstitution

    def skew_entries(self) -> list[list[MultiPoly]]:
        return _entries(self.skew, self.n)

    def symmetric_entries(self) -> list[list[MultiPoly]]:
        return _entries(self.symmetric, self.n)


def _entries(substitution: LinearSubstitution, n: int) -> list[list[MultiPoly]]:
    size = n * n
    matrix = substitution.matrix
    return [[MultiPoly.linear_form([matrix[variable_index(i, j, n), b] for b in range(size)], QQ)
             for j in range(n)] for i in range(n)]


def sym_skew_split(n: int) -> SymSkewSplit:
    size = n * n
    half = Fraction(1, 2)
    skew = [[Fraction(0)] * size for _ in range(size)]
    symmetric = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            row, mirror = variable_index(i, j, n), variable_index(j, i, n)
            skew[row][row] += half
            skew[row][mirror] -= half
            symmetric[row][row] += half
            symmetric[row][mirror] += half
    return SymSkewSplit(
        n,
        LinearSubstitution(ExactMatrix(skew, QQ, ncols=size)),
        LinearSubstitution(ExactMatrix(symmetric, QQ, ncols=size)),
    )


def p_lambda(n: int) -> MatrixSpacePoly:
    """
    The p_lambda function assembles P_Lambda from the Pfaffian minors of the skew part,
    normalized as det(A, ..., A, S).

    :param n: int: Matrix size; even n gives the zero polynomial with a warning
    :return: MatrixSpacePoly of degree n on M_n
    """
    size = n * n
    if n < 1:
        raise InvalidInputError("P_Lambda needs n >= 1")
    if n > settings.max_expansion_n:
        raise UnsupportedSizeError(f"Full expansion is capped at n = {settings.max_expansion_n}")
    if n % 2 == 0:
        logger.warning("P_Lambda vanishes for even n = %d", n)
        return MatrixSpacePoly(n, MultiPoly.zero(size, QQ), f"plambda:{n}")
    split = sym_skew_split(n)
    skew, symmetric = split.skew_entries(), split.symmetric_entries()
    one = MultiPoly.constant(1, size, QQ)
    minors = [pfaffian_minor(skew, i, one) for i in range(n)]
    total = MultiPoly.zero(size, QQ)
    for i in range(n):
        for j in range(n):
            term = symmetric[i][j] * minors[i] * minors[j]
            total = total - term if (i + j) % 2 else total + term
    return MatrixSpacePoly(n, total.scale(Fraction(1, n)), f"plambda:{n}")


@dataclass
class CurveLimit:
    n: int
    constant_vanishes: bool
    scalar: Optional[Fraction]

    @property
    def passed(self) -> bool:
        return self.constant_vanishes and self.scalar is not None and self.scalar != 0


def _proportionality(poly: MultiPoly, reference: MultiPoly) -> Optional[Fraction]:
    """c with poly = c * reference, or None."""
    if reference.is_zero():
        return None
    monomial, value = next(iter(reference.terms.items()))
    scalar = poly.coefficient(monomial) / value
    return scalar if poly == reference.scale(scalar) else None


def curve_limit_check(n: int) -> CurveLimit:
    """
    The curve_limit_check function expands det(A + tS) in t over QQ and compares its first
    two coefficients with the boundary polynomial.

    :param n: int: Odd size, n <= 5
    :return: CurveLimit with the t^0 test and the scalar c where [t^1] = c P_Lambda (c = n)
    :raises UnsupportedSizeError: n even or n > 5
    """
    if n % 2 == 0 or not 1 <= n <= 5:
        raise UnsupportedSizeError(f"The curve expansion is run for odd n <= 5, got {n}")
    size = n * n
    split = sym_skew_split(n)
    t = MultiPoly.variable(size, size + 1, QQ)
    skew, symmetric = split.skew_entries(), split.symmetric_entries()
    entries = [[skew[i][j].embed(size + 1) + t * symmetric[i][j].embed(size + 1) for j in range(n)]
               for i in range(n)]
    expansion = symbolic_det(entries)
    by_power: dict[int, dict] = {}
    for monomial, value in expansion.terms.items():
        by_power.setdefault(monomial[-1], {})[monomial[:-1]] = value
    constant = MultiPoly(size, by_power.get(0, {}), QQ)
    linear = MultiPoly(size, by_power.get(1, {}), QQ)
    scalar = _proportionality(linear, p_lambda(n).poly)
    logger.info("n = %d: [t^0] vanishes %s, [t^1] = %s P_Lambda", n, constant.is_zero(), scalar)
    return CurveLimit(n, constant.is_zero(), scalar)


def congruence_substitution(g: ExactMatrix) -> LinearSubstitution:
    """M -> g M g^T on the flattened coordinates: entry ((i, j), (a, b)) = g_ia g_jb."""
    n = g.nrows
    size = n * n
    rows = [[g[i, a] * g[j, b] for a in range(n) for b in range(n)] for i in range(n) for j in range(n)]
    return LinearSubstitution(ExactMatrix(rows, g.field, ncols=size))


def congruence_scalar(poly: MatrixSpacePoly, g: ExactMatrix) -> Optional[Fraction]:
    """c with P(g M g^T) = c P(M), or None when P is not semi-invariant under g."""
    moved = poly.poly.substitute(congruence_substitution(g))
    return _proportionality(moved, poly.poly)
