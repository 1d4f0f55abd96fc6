from typing import Iterable, Mapping, Optional, Sequence

from src.arith.matrix import ExactMatrix
from src.arith.scalars import QQ, Field, Scalar, field_of
from src.errors import FieldMismatchError, InvalidInputError

Monomial = tuple[int, ...]


def grlex_key(monomial: Monomial) -> tuple:
    """Sort key putting higher total degree first, then x0 > x1 > ... lexicographically."""
    return -sum(monomial), tuple(-e for e in monomial)


class LinearSubstitution:
    """
    Linear map from m new variables into N old ones: old x_i = sum_j matrix[i, j] * y_j.
    The columns are the images of the new basis vectors.
    """

    def __init__(self, matrix: ExactMatrix):
        self.matrix = matrix

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Optional[Field] = None) -> 'LinearSubstitution':
        return cls(ExactMatrix.from_columns(columns, field))

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> 'LinearSubstitution':
        return cls(ExactMatrix.identity(n, field))

    @property
    def old_vars(self) -> int:
        return self.matrix.nrows

    @property
    def new_vars(self) -> int:
        return self.matrix.ncols

    def compose(self, other: 'LinearSubstitution') -> 'LinearSubstitution':
        """Substituting self and then other equals substituting self.compose(other)."""
        return LinearSubstitution(self.matrix @ other.matrix)

    def apply(self, point: Sequence) -> list[Scalar]:
        return self.matrix.apply(point)


class MultiPoly:
    """Sparse polynomial: exponent vectors of length nvars mapped to nonzero field coefficients."""
    __slots__ = ('nvars', 'field', 'terms')

    def __init__(self, nvars: int, terms: Optional[Mapping[Monomial, object]] = None, field: Optional[Field] = None):
        terms = dict(terms or {})
        if field is None:
            field = field_of(terms.values())
        self.nvars = nvars
        self.field = field
        self.terms: dict[Monomial, Scalar] = {}
        for monomial, coefficient in terms.items():
            monomial = tuple(monomial)
            if len(monomial) != nvars or any(e < 0 for e in monomial):
                raise InvalidInputError(f"Exponent vector {monomial} does not fit {nvars} variables")
            coefficient = field.coerce(coefficient)
            if coefficient != 0:
                self.terms[monomial] = coefficient

    @classmethod
    def zero(cls, nvars: int, field: Field = QQ) -> 'MultiPoly':
        return cls(nvars, {}, field)

    @classmethod
    def constant(cls, value, nvars: int, field: Field = QQ) -> 'MultiPoly':
        return cls(nvars, {(0,) * nvars: value}, field)

    @classmethod
    def variable(cls, index: int, nvars: int, field: Field = QQ) -> 'MultiPoly':
        if not 0 <= index < nvars:
            raise InvalidInputError(f"Variable x{index} out of range for {nvars} variables")
        monomial = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {monomial: 1}, field)

    @classmethod
    def linear_form(cls, coefficients: Sequence, field: Field = QQ) -> 'MultiPoly':
        n = len(coefficients)
        return cls(n, {tuple(1 if i == j else 0 for i in range(n)): c for j, c in enumerate(coefficients)}, field)

    @classmethod
    def _raw(cls, nvars: int, terms: dict, field: Field) -> 'MultiPoly':
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly.field = field
        poly.terms = terms
        return poly

    # --- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    @property
    def homogeneous_degree(self) -> Optional[int]:
        degrees = {sum(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def support(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self.terms.get(tuple(monomial), self.field.zero)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        from src.poly.text import format_poly
        return f"MultiPoly({format_poly(self)!r}, nvars={self.nvars}, field={self.field!r})"

    # --- arithmetic ------------------------------------------------------

    def _check(self, other: 'MultiPoly'):
        if self.nvars != other.nvars:
            raise InvalidInputError(f"Variable counts differ: {self.nvars} and {other.nvars}")
        if self.field != other.field:
            raise FieldMismatchError(f"Fields differ: {self.field!r} and {other.field!r}")

    def _lift(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(other, self.nvars, self.field)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            value = terms.get(monomial)
            value = coefficient if value is None else value + coefficient
            if value == 0:
                terms.pop(monomial, None)
            else:
                terms[monomial] = value
        return MultiPoly._raw(self.nvars, terms, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, scalar) -> 'MultiPoly':
        scalar = self.field.coerce(scalar)
        if scalar == 0:
            return MultiPoly.zero(self.nvars, self.field)
        return MultiPoly._raw(self.nvars, {m: c * scalar for m, c in self.terms.items()}, self.field)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        terms: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = tuple(a + b for a, b in zip(m1, m2))
                value = terms.get(monomial)
                terms[monomial] = c1 * c2 if value is None else value + c1 * c2
        return MultiPoly._raw(self.nvars, {m: c for m, c in terms.items() if c != 0}, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if exponent < 0:
            raise InvalidInputError("Negative powers of polynomials are not polynomials")
        result = MultiPoly.constant(1, self.nvars, self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def to_field(self, field: Field) -> 'MultiPoly':
        """Reduce (or re-coerce) every coefficient into another field."""
        return MultiPoly(self.nvars, {m: field.coerce(c) for m, c in self.terms.items()}, field)

    # --- calculus and evaluation -----------------------------------------

    def partial_derivative(self, var: int) -> 'MultiPoly':
        if not 0 <= var < self.nvars:
            raise InvalidInputError(f"Variable x{var} out of range for {self.nvars} variables")
        terms = {}
        for monomial, coefficient in self.terms.items():
            e = monomial[var]
            if e:
                lowered = monomial[:var] + (e - 1,) + monomial[var + 1:]
                value = coefficient * e
                if value != 0:
                    terms[lowered] = value
        return MultiPoly._raw(self.nvars, terms, self.field)

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise InvalidInputError(f"Point has {len(point)} coordinates, expected {self.nvars}")
        point = [self.field.coerce(v) for v in point]
        powers: dict[tuple[int, int], Scalar] = {}
        total = self.field.zero
        for monomial, coefficient in self.terms.items():
            value = coefficient
            for i, e in enumerate(monomial):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = point[i] ** e
                    value = value * powers[key]
            total = total + value
        return total

    def substitute(self, substitution: LinearSubstitution) -> 'MultiPoly':
        """
        The substitute function pulls the polynomial back along a linear map.

        :param substitution: LinearSubstitution: N x m matrix sending the m new variables into the N old ones
        :return: The polynomial P(S y) in the m new variables
        """
        matrix = substitution.matrix
        if matrix.nrows != self.nvars:
            raise InvalidInputError(f"Substitution has {matrix.nrows} rows, expected {self.nvars}")
        m = matrix.ncols
        field = self.field
        images = [MultiPoly(m, {tuple(1 if k == j else 0 for k in range(m)): field.coerce(matrix[i, j])
                                for j in range(m)}, field) for i in range(self.nvars)]
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in cache:
                cache[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return cache[key]

        result = MultiPoly.zero(m, field)
        for monomial, coefficient in self.terms.items():
            term = MultiPoly.constant(coefficient, m, field)
            for i, e in enumerate(monomial):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def embed(self, nvars: int, offset: int = 0) -> 'MultiPoly':
        """Same polynomial in a larger ring, variables shifted by offset."""
        if offset + self.nvars > nvars:
            raise InvalidInputError("Embedding does not fit the target ring")
        pad_left, pad_right = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return MultiPoly._raw(nvars, {pad_left + m + pad_right: c for m, c in self.terms.items()}, self.field)

    def gradient(self) -> list['MultiPoly']:
        return [self.partial_derivative(i) for i in range(self.nvars)]


def poly_sum(polys: Iterable[MultiPoly], nvars: int, field: Field = QQ) -> MultiPoly:
    total = MultiPoly.zero(nvars, field)
    for poly in polys:
        total = total + poly
    return total


def symbolic_det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """
    Determinant of a square matrix of polynomials by Laplace expansion along rows, with
    minors memoized on their column sets.
    """
    n = len(matrix)
    if n == 0:
        raise InvalidInputError("Determinant of an empty polynomial matrix needs a ring")
    nvars, field = matrix[0][0].nvars, matrix[0][0].field
    memo: dict[tuple[int, ...], MultiPoly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> MultiPoly:
        if row == n:
            return MultiPoly.constant(1, nvars, field)
        if cols in memo:
            return memo[cols]
        total = MultiPoly.zero(nvars, field)
        for position, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            rest = minor(row + 1, cols[:position] + cols[position + 1:])
            term = entry * rest
            total = total - term if position % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))
