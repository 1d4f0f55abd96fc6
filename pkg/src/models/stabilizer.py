import logging

from config_file import settings
from src.arith.matrix import sparse_rank
from src.errors import InvalidInputError, UnsupportedSizeError
from src.models.matrix_space import matrix_size
from src.poly.multipoly import MultiPoly

logger = logging.getLogger(__name__)


def stabilizer_dim(poly: MultiPoly) -> int:
    """
    The stabilizer_dim function returns the dimension of the Lie algebra stabilizer of the
    line [P]: the u in End(W) whose infinitesimal action sum_ab u_ab x_b dP/dx_a is a multiple
    of P. That is N^2 + 1 minus the rank of the N^2 vectors x_b dP/dx_a together with P.

    :param poly: MultiPoly: Nonzero P on W = M_n, N = n^2
    :return: The dimension
    :raises UnsupportedSizeError: n exceeds settings.max_stabilizer_n
    """
    if poly.is_zero():
        raise InvalidInputError("The stabilizer of the zero polynomial is everything")
    n = matrix_size(poly.nvars)
    if n > settings.max_stabilizer_n:
        raise UnsupportedSizeError(f"Stabilizer systems are capped at n = {settings.max_stabilizer_n}")
    size = poly.nvars
    vectors = [dict(poly.terms)]
    for a in range(size):
        partial = poly.partial_derivative(a)
        if partial.is_zero():
            continue
        for b in range(size):
            moved = partial * MultiPoly.variable(b, size, poly.field)
            vectors.append(dict(moved.terms))
    rank = sparse_rank(vectors)
    logger.debug("stabilizer system for n = %d has rank %d", n, rank)
    return size * size + 1 - rank
