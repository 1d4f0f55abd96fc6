from typing import Optional, Sequence

from src.arith.scalars import Field, Scalar, field_of
from src.errors import InvalidInputError


def _echelon(rows: list[list], ncols: int, reduced: bool = True,
             stop_col: Optional[int] = None) -> list[int]:
    """
    In-place Gauss-Jordan elimination over a field. Pivot rows are normalized to 1.

    :param rows: list[list]: Mutable row lists, modified in place
    :param ncols: int: Number of columns
    :param reduced: bool: Clear entries above pivots too (RREF) or only below (echelon form)
    :param stop_col: Optional[int]: Do not pivot on columns at or past this index
    :return: The pivot column indices
    """
    pivots = []
    r = 0
    last = ncols if stop_col is None else stop_col
    nrows = len(rows)
    for c in range(last):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        support = [j for j in range(c, ncols) if prow[j] != 0]
        for j in support:
            prow[j] = prow[j] * inv
        targets = range(nrows) if reduced else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            factor = row[c]
            if factor == 0:
                continue
            for j in support:
                row[j] = row[j] - factor * prow[j]
        pivots.append(c)
        r += 1
    return pivots


class ExactMatrix:
    """Dense rectangular matrix whose entries share one exact field."""

    def __init__(self, rows: Sequence[Sequence], field: Optional[Field] = None, ncols: Optional[int] = None):
        rows = [list(row) for row in rows]
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise InvalidInputError("Matrix rows have different lengths")
        if ncols is None:
            ncols = widths.pop() if widths else 0
        elif widths and widths != {ncols}:
            raise InvalidInputError("Matrix rows do not match the declared column count")
        if field is None:
            field = field_of(value for row in rows for value in row)
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = tuple(tuple(field.coerce(value) for value in row) for row in rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Optional[Field] = None,
                     nrows: Optional[int] = None) -> 'ExactMatrix':
        columns = [list(col) for col in columns]
        if not columns:
            return cls([[] for _ in range(nrows or 0)], field, ncols=0)
        return cls([list(row) for row in zip(*columns)], field)

    @classmethod
    def identity(cls, n: int, field: Field) -> 'ExactMatrix':
        return cls([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field) -> 'ExactMatrix':
        return cls([[field.zero] * ncols for _ in range(nrows)], field, ncols=ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field!r})"

    def column(self, j: int) -> list[Scalar]:
        return [row[j] for row in self.rows]

    def columns(self) -> list[list[Scalar]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> 'ExactMatrix':
        return ExactMatrix(self.columns(), self.field, ncols=self.nrows)

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if self.ncols != other.nrows:
            raise InvalidInputError(f"Cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        zero = self.field.zero
        rows = [[sum((a * b for a, b in zip(row, col) if a != 0), zero) for col in cols] for row in self.rows]
        return ExactMatrix(rows, self.field, ncols=other.ncols)

    def apply(self, vector: Sequence) -> list[Scalar]:
        if len(vector) != self.ncols:
            raise InvalidInputError("Vector length does not match the column count")
        vector = [self.field.coerce(v) for v in vector]
        zero = self.field.zero
        return [sum((a * b for a, b in zip(row, vector) if a != 0), zero) for row in self.rows]

    def rref(self) -> tuple['ExactMatrix', list[int]]:
        rows = [list(row) for row in self.rows]
        pivots = _echelon(rows, self.ncols)
        return ExactMatrix(rows, self.field, ncols=self.ncols), pivots

    def rank(self) -> int:
        rows = [list(row) for row in self.rows]
        return len(_echelon(rows, self.ncols, reduced=False))

    def det(self) -> Scalar:
        if self.nrows != self.ncols:
            raise InvalidInputError("Determinant of a non-square matrix")
        rows = [list(row) for row in self.rows]
        n = self.nrows
        result = self.field.one
        for c in range(n):
            pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if pivot is None:
                return self.field.zero
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                result = -result
            prow = rows[c]
            result = result * prow[c]
            inv = 1 / prow[c]
            for i in range(c + 1, n):
                factor = rows[i][c] * inv
                if factor == 0:
                    continue
                row = rows[i]
                for j in range(c, n):
                    if prow[j] != 0:
                        row[j] = row[j] - factor * prow[j]
        return result

    def inverse(self) -> 'ExactMatrix':
        n = self.nrows
        if n != self.ncols:
            raise InvalidInputError("Inverse of a non-square matrix")
        one, zero = self.field.one, self.field.zero
        rows = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(self.rows)]
        pivots = _echelon(rows, 2 * n, stop_col=n)
        if len(pivots) < n:
            raise InvalidInputError("Matrix is not invertible")
        return ExactMatrix([row[n:] for row in rows], self.field, ncols=n)


def rank(matrix: ExactMatrix) -> int:
    """
    The rank function returns the exact rank of a matrix over its own field.

    :param matrix: ExactMatrix: Matrix over QQ or GF(p)
    :return: The rank
    """
    return matrix.rank()


def kernel_basis(matrix: ExactMatrix) -> ExactMatrix:
    """
    The kernel_basis function returns a basis of the right kernel as the columns of a matrix.

    :param matrix: ExactMatrix: Matrix M
    :return: A cols x (cols - rank) matrix K with M K = 0
    """
    reduced, pivots = matrix.rref()
    field = matrix.field
    free = [j for j in range(matrix.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        vector = [field.zero] * matrix.ncols
        vector[f] = field.one
        for i, c in enumerate(pivots):
            vector[c] = -reduced[i, f]
        basis.append(vector)
    return ExactMatrix.from_columns(basis, field, nrows=matrix.ncols)


def solve_membership(span: ExactMatrix, vector: Sequence) -> Optional[list[Scalar]]:
    """
    The solve_membership function expresses a vector in the column span of a matrix.

    :param span: ExactMatrix: Spanning columns
    :param vector: Sequence: Target vector, same length as the columns
    :return: Coefficients c with span @ c = vector, or None when the vector lies outside the span
    """
    if len(vector) != span.nrows:
        raise InvalidInputError("Vector length does not match the span")
    field = span.field
    k = span.ncols
    rows = [list(row) + [field.coerce(v)] for row, v in zip(span.rows, vector)]
    pivots = _echelon(rows, k + 1, stop_col=k)
    if any(rows[i][k] != 0 for i in range(len(pivots), span.nrows)):
        return None
    coefficients = [field.zero] * k
    for i, c in enumerate(pivots):
        coefficients[c] = rows[i][k]
    return coefficients


def generalized_inverse(matrix: ExactMatrix) -> ExactMatrix:
    """
    A matrix G with M G M = M: the inverse of a maximal nonsingular submatrix, placed at the
    transposed position and padded with zeros.
    """
    _, col_pivots = matrix.rref()
    _, row_pivots = matrix.transpose().rref()
    field = matrix.field
    block = ExactMatrix([[matrix[i, j] for j in col_pivots] for i in row_pivots], field,
                        ncols=len(col_pivots)).inverse()
    result = [[field.zero] * matrix.nrows for _ in range(matrix.ncols)]
    for a, j in enumerate(col_pivots):
        for b, i in enumerate(row_pivots):
            result[j][i] = block[a, b]
    return ExactMatrix(result, field, ncols=matrix.nrows)


def sparse_rank(vectors: Sequence[dict]) -> int:
    """
    The sparse_rank function returns the rank of a family of sparse vectors.

    Vectors are dicts from a hashable coordinate label (a monomial, say) to nonzero
    scalars of one field. Elimination keeps a dict of reduced pivot rows keyed by their
    leading label, so only nonzero coordinates are ever touched.

    :param vectors: Sequence[dict]: The family, each vector as {label: scalar}
    :return: Dimension of the span
    """
    pivots: dict = {}
    for vector in vectors:
        row = {label: value for label, value in vector.items() if value != 0}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                inv = 1 / row[lead]
                pivots[lead] = {label: value * inv for label, value in row.items()}
                break
            factor = row[lead]
            for label, value in pivot.items():
                updated = row.get(label, 0) - factor * value
                if updated == 0:
                    row.pop(label, None)
                else:
                    row[label] = updated
    return len(pivots)
