"""
Hessians of homogeneous polynomials.

H(w) is always the raw matrix of second partial derivatives. The quadratic form
X^T H(w) X equals d(d-1) P(w,...,w,X,X) for the fully polarized P, and twice the
second order Taylor coefficient of s -> P(w + sX).
"""
from typing import Optional, Sequence

from src.arith.matrix import ExactMatrix
from src.arith.scalars import Field, Scalar
from src.errors import DegenerateFlagError, InvalidInputError
from src.poly.multipoly import MultiPoly, symbolic_det


class HessianMatrix:
    """Symmetric grid of second partials, entries homogeneous of degree d - 2."""

    def __init__(self, entries: Sequence[Sequence[MultiPoly]], source: Optional[MultiPoly] = None):
        self.entries = [list(row) for row in entries]
        self.size = len(self.entries)
        self.source = source
        first = self.entries[0][0]
        self.nvars = first.nvars
        self.field = first.field

    def __getitem__(self, key) -> MultiPoly:
        i, j = key
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.size) for j in range(i + 1, self.size))

    def at(self, point: Sequence) -> ExactMatrix:
        return ExactMatrix([[entry.evaluate(point) for entry in row] for row in self.entries], self.field)

    def det(self) -> MultiPoly:
        return symbolic_det(self.entries)

    def __repr__(self):
        return f"HessianMatrix({self.size}x{self.size}, nvars={self.nvars})"


def _check_degree(poly: MultiPoly) -> int:
    degree = poly.homogeneous_degree
    if degree is None:
        raise InvalidInputError("The Hessian is defined here for nonzero homogeneous polynomials only")
    if degree < 2:
        raise InvalidInputError(f"The Hessian of a form of degree {degree} vanishes; degree >= 2 is required")
    return degree


def hessian(poly: MultiPoly) -> HessianMatrix:
    """
    The hessian function returns the symbolic matrix of second partial derivatives.

    :param poly: MultiPoly: Homogeneous polynomial of degree d >= 2
    :return: HessianMatrix with entry (i, j) = d^2 P / dx_i dx_j
    :raises InvalidInputError: P is not homogeneous or d < 2
    """
    _check_degree(poly)
    first = poly.gradient()
    n = poly.nvars
    entries = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            entries[i][j] = entries[j][i] = first[i].partial_derivative(j)
    return HessianMatrix(entries, poly)


def hessian_at(poly: MultiPoly, point: Sequence, field: Optional[Field] = None) -> ExactMatrix:
    """
    The hessian_at function evaluates the Hessian at a point straight from the terms of P,
    without building the symbolic matrix.

    :param poly: MultiPoly: Polynomial of degree >= 2
    :param point: Sequence: Coordinates of w
    :param field: Optional[Field]: Field of the result; P's own field when omitted
    :return: The numeric N x N matrix H(w)
    """
    field = field or poly.field
    if poly.field != field:
        poly = poly.to_field(field)
    n = poly.nvars
    if len(point) != n:
        raise InvalidInputError(f"Point has {len(point)} coordinates, expected {n}")
    w = [field.coerce(v) for v in point]
    zero = field.zero
    grid = [[zero] * n for _ in range(n)]
    powers: dict[tuple[int, int], Scalar] = {}

    def power(i: int, e: int) -> Scalar:
        key = (i, e)
        if key not in powers:
            powers[key] = w[i] ** e
        return powers[key]

    for monomial, coefficient in poly.terms.items():
        support = [i for i, e in enumerate(monomial) if e]
        for a, i in enumerate(support):
            for j in support[a:]:
                lowered = list(monomial)
                if i == j:
                    factor = monomial[i] * (monomial[i] - 1)
                    if factor == 0:
                        continue
                    lowered[i] -= 2
                else:
                    factor = monomial[i] * monomial[j]
                    lowered[i] -= 1
                    lowered[j] -= 1
                value = coefficient * factor
                for k in support:
                    if lowered[k]:
                        value = value * power(k, lowered[k])
                grid[i][j] = grid[i][j] + value
    for i in range(n):
        for j in range(i + 1, n):
            grid[j][i] = grid[i][j]
    return ExactMatrix(grid, field, ncols=n)


def _basis_matrix(columns: Sequence[Sequence], nvars: int, field: Field) -> ExactMatrix:
    basis = ExactMatrix.from_columns(columns, field, nrows=nvars)
    if basis.nrows != nvars:
        raise InvalidInputError(f"Basis columns have {basis.nrows} coordinates, expected {nvars}")
    if basis.rank() < basis.ncols:
        raise DegenerateFlagError("Basis columns are linearly dependent")
    return basis


def restrict_hessian(matrix: HessianMatrix, columns: Sequence[Sequence]) -> HessianMatrix:
    """
    The restrict_hessian function restricts the Hessian form to the span of F.

    :param matrix: HessianMatrix: Symbolic Hessian of P
    :param columns: Sequence[Sequence]: Independent basis columns of F
    :return: The m x m matrix B^T H B, entries still polynomials in the N ambient variables
    :raises DegenerateFlagError: The columns are dependent
    """
    basis = _basis_matrix(columns, matrix.size, matrix.field)
    m = basis.ncols
    zero = MultiPoly.zero(matrix.nvars, matrix.field)
    half = [[zero] * m for _ in range(matrix.size)]
    for a in range(matrix.size):
        for j in range(m):
            total = zero
            for b in range(matrix.size):
                if basis[b, j] != 0 and not matrix[a, b].is_zero():
                    total = total + matrix[a, b].scale(basis[b, j])
            half[a][j] = total
    entries = [[zero] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            total = zero
            for a in range(matrix.size):
                if basis[a, i] != 0 and not half[a][j].is_zero():
                    total = total + half[a][j].scale(basis[a, i])
            entries[i][j] = total
    return HessianMatrix(entries, matrix.source)


def restricted_hessian_at(poly: MultiPoly, columns: Sequence[Sequence], point: Sequence,
                          field: Optional[Field] = None) -> ExactMatrix:
    """Numeric B^T H(w) B."""
    field = field or poly.field
    basis = ExactMatrix.from_columns(columns, field, nrows=poly.nvars)
    return basis.transpose() @ hessian_at(poly, point, field) @ basis


def mixed_hessian_det(poly: MultiPoly, direction: MultiPoly, columns: Sequence[Sequence]) -> MultiPoly:
    """
    The mixed_hessian_det function returns the column-polarized determinant
    det(H_P, ..., H_P, H_pi) restricted to F, unnormalized.

    It is the sum over j of det(H_P|_F) with column j replaced by column j of H_pi|_F,
    which is the coefficient of eps in det(H_{P + eps pi}|_F).

    :param poly: MultiPoly: P, homogeneous of degree d
    :param direction: MultiPoly: pi, homogeneous of degree d, or zero
    :param columns: Sequence[Sequence]: Basis columns of F
    :return: A polynomial of degree (d - 2) dim F, or zero
    :raises InvalidInputError: Degrees of P and pi differ
    """
    degree = _check_degree(poly)
    if direction.is_zero():
        return MultiPoly.zero(poly.nvars, poly.field)
    if direction.homogeneous_degree != degree:
        raise InvalidInputError(f"Direction has degree {direction.degree}, expected {degree}")
    base = restrict_hessian(hessian(poly), columns)
    other = restrict_hessian(hessian(direction), columns)
    m = base.size
    total = MultiPoly.zero(poly.nvars, poly.field)
    for j in range(m):
        replaced = [[other[i, c] if c == j else base[i, c] for c in range(m)] for i in range(m)]
        total = total + symbolic_det(replaced)
    return total
