from dataclasses import dataclass
from typing import Sequence

from config_file import settings
from src.arith.matrix import ExactMatrix
from src.arith.prng import Prng
from src.arith.scalars import Field, Scalar
from src.errors import DegenerateFlagError, InvalidInputError, SamplingExhaustedError


@dataclass(frozen=True)
class Flag:
    """
    Nested subspaces D < L < F given by one ordered list of basis columns: D is spanned by
    the first column, L by the first two, F by all of them.

    In coordinates adapted to the flag, x is dual to the first column, y to the second,
    z to the remaining columns of F and w to any completion of F to a basis.
    """
    columns: tuple[tuple[Scalar, ...], ...]
    field: Field

    def __post_init__(self):
        if len(self.columns) < 2:
            raise DegenerateFlagError("A flag needs at least the two columns spanning L")
        if len({len(c) for c in self.columns}) != 1:
            raise InvalidInputError("Flag columns have different lengths")
        if ExactMatrix.from_columns(self.columns, self.field).rank() < len(self.columns):
            raise DegenerateFlagError("Flag columns are linearly dependent")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field) -> 'Flag':
        return cls(tuple(tuple(field.coerce(v) for v in column) for column in columns), field)

    @property
    def ambient(self) -> int:
        return len(self.columns[0])

    @property
    def dim(self) -> int:
        return len(self.columns)

    @property
    def k(self) -> int:
        """dim F = k + 3."""
        return self.dim - 3

    @property
    def point(self) -> tuple[Scalar, ...]:
        return self.columns[0]

    @property
    def line(self) -> tuple[tuple[Scalar, ...], ...]:
        return self.columns[:2]

    def adapted_basis(self) -> ExactMatrix:
        """
        The flag columns completed by standard basis vectors to a basis of W, as the columns
        of an invertible N x N matrix.
        """
        field = self.field
        columns = [list(c) for c in self.columns]
        current = len(columns)
        for i in range(self.ambient):
            if len(columns) == self.ambient:
                break
            candidate = columns + [[field.one if j == i else field.zero for j in range(self.ambient)]]
            if ExactMatrix.from_columns(candidate, field).rank() > current:
                columns = candidate
                current += 1
        return ExactMatrix.from_columns(columns, field)


def random_flag(ambient: int, dim: int, field: Field, rng: Prng) -> Flag:
    """
    The random_flag function draws a flag whose F has the given dimension, columns uniform
    over the field (small integers over QQ).

    :param ambient: int: N, the dimension of W
    :param dim: int: dim F = k + 3
    :param field: Field: Sampling field
    :param rng: Prng: Generator the columns are drawn from
    :return: A flag with independent columns
    :raises InvalidInputError: dim F exceeds N
    """
    if dim > ambient:
        raise InvalidInputError(f"Cannot place a {dim}-dimensional F inside a {ambient}-dimensional space")
    for _ in range(settings.sampling_retries):
        columns = [[field.random_element(rng) for _ in range(ambient)] for _ in range(dim)]
        try:
            return Flag.from_columns(columns, field)
        except DegenerateFlagError:
            continue
    raise SamplingExhaustedError(f"No independent flag found in {settings.sampling_retries} draws")
