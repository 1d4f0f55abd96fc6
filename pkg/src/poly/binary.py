from typing import Callable, Sequence

from src.arith.scalars import Field, Scalar
from src.errors import FieldMismatchError, InvalidInputError
from src.poly.multipoly import MultiPoly


def interpolate(points: Sequence[Scalar], values: Sequence[Scalar], field: Field) -> list[Scalar]:
    """
    The interpolate function returns the coefficients (ascending) of the unique polynomial of
    degree < len(points) through the given values, via Newton divided differences.

    :param points: Sequence[Scalar]: Pairwise distinct abscissae
    :param values: Sequence[Scalar]: Values at those abscissae
    :param field: Field: Coefficient field
    :return: Coefficients c_0, c_1, ... of sum c_m t^m
    """
    n = len(points)
    points = [field.coerce(t) for t in points]
    table = [field.coerce(v) for v in values]
    newton = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (points[i + level] - points[i]) for i in range(n - level)]
        newton.append(table[0])
    coefficients = [field.zero] * n
    basis = [field.one]
    for level, weight in enumerate(newton):
        for m, b in enumerate(basis):
            coefficients[m] = coefficients[m] + weight * b
        if level < n - 1:
            shifted = [field.zero] + basis
            for m, b in enumerate(basis):
                shifted[m] = shifted[m] - points[level] * b
            basis = shifted
    return coefficients


class BinaryForm:
    """Dense binary form sum_i c_i x^i y^(d-i); coefficient i belongs to x^i."""
    __slots__ = ('degree', 'coeffs', 'field')

    def __init__(self, coeffs: Sequence, field: Field):
        if not coeffs:
            raise InvalidInputError("A binary form needs at least one coefficient")
        self.field = field
        self.coeffs = tuple(field.coerce(c) for c in coeffs)
        self.degree = len(self.coeffs) - 1

    @classmethod
    def from_multipoly(cls, poly: MultiPoly, degree: int) -> 'BinaryForm':
        if poly.nvars != 2:
            raise InvalidInputError("A binary form lives in exactly two variables")
        coeffs = [poly.field.zero] * (degree + 1)
        for (i, j), c in poly.terms.items():
            if i + j != degree:
                raise InvalidInputError(f"Term x^{i} y^{j} is not of degree {degree}")
            coeffs[i] = c
        return cls(coeffs, poly.field)

    @classmethod
    def from_line_values(cls, degree: int, value_at: Callable[[Scalar], Scalar], field: Field) -> 'BinaryForm':
        """Recover F from t -> F(1, t) sampled at t = 0..degree."""
        points = [field.coerce(t) for t in range(degree + 1)]
        ascending = interpolate(points, [value_at(t) for t in points], field)
        return cls([ascending[degree - i] for i in range(degree + 1)], field)

    def to_multipoly(self) -> MultiPoly:
        d = self.degree
        return MultiPoly(2, {(i, d - i): c for i, c in enumerate(self.coeffs)}, self.field)

    @property
    def leading(self) -> Scalar:
        """Coefficient of x^d, written p_d."""
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"BinaryForm({[str(c) for c in self.coeffs]}, {self.field!r})"

    def _check(self, other: 'BinaryForm'):
        if self.field != other.field:
            raise FieldMismatchError(f"Fields differ: {self.field!r} and {other.field!r}")

    def __add__(self, other: 'BinaryForm') -> 'BinaryForm':
        self._check(other)
        if self.degree != other.degree:
            raise InvalidInputError("Only forms of equal degree can be added")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __sub__(self, other: 'BinaryForm') -> 'BinaryForm':
        return self + other.scale(-1)

    def __mul__(self, other: 'BinaryForm') -> 'BinaryForm':
        self._check(other)
        coeffs = [self.field.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                coeffs[i + j] = coeffs[i + j] + a * b
        return BinaryForm(coeffs, self.field)

    def scale(self, scalar) -> 'BinaryForm':
        scalar = self.field.coerce(scalar)
        return BinaryForm([c * scalar for c in self.coeffs], self.field)

    def times_y_power(self, k: int) -> 'BinaryForm':
        """Multiply by y^k: degree grows, x-exponents are unchanged."""
        return BinaryForm(list(self.coeffs) + [self.field.zero] * k, self.field)

    def scale_y(self, lam) -> 'BinaryForm':
        """F(x, lam y)."""
        lam = self.field.coerce(lam)
        d = self.degree
        return BinaryForm([c * lam ** (d - i) for i, c in enumerate(self.coeffs)], self.field)

    def series_coefficients(self) -> list[Scalar]:
        """Coefficients of F(1, y) in ascending powers of y."""
        return list(reversed(self.coeffs))

    def evaluate(self, x, y) -> Scalar:
        x, y = self.field.coerce(x), self.field.coerce(y)
        d = self.degree
        total = self.field.zero
        for i, c in enumerate(self.coeffs):
            total = total + c * x ** i * y ** (d - i)
        return total
