"""
Padded polynomials P = l^(d-m) R, with R of degree m in the first M variables and l the
extra variable x_M. Further ambient variables, if any, do not occur in P.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from config_file import settings
from src.arith.prng import Prng
from src.errors import InvalidInputError
from src.poly.multipoly import MultiPoly
from src.polarize.hessian import hessian
from src.polarize.katz import katz_dual_dim

logger = logging.getLogger(__name__)

PADDED_TRIAL_FACTOR = 4


@dataclass(frozen=True)
class PaddedPoly:
    base: MultiPoly
    degree: int
    nvars: int
    poly: MultiPoly

    @property
    def pad(self) -> int:
        """d - m."""
        return self.degree - self.base.homogeneous_degree

    @property
    def ell(self) -> int:
        """Index of the padding variable."""
        return self.base.nvars


def padded_poly(base: MultiPoly, degree: int, nvars: Optional[int] = None) -> PaddedPoly:
    """
    The padded_poly function builds l^(d-m) R.

    :param base: MultiPoly: R, homogeneous of degree m in M variables
    :param degree: int: d > m
    :param nvars: Optional[int]: Ambient N >= M + 1, M + 1 by default
    :return: PaddedPoly
    :raises InvalidInputError: R is not homogeneous or d <= m
    """
    m = base.homogeneous_degree
    if m is None:
        raise InvalidInputError("Only nonzero homogeneous polynomials can be padded")
    if degree <= m:
        raise InvalidInputError(f"Padding degree {degree} must exceed deg R = {m}")
    nvars = base.nvars + 1 if nvars is None else nvars
    if nvars < base.nvars + 1:
        raise InvalidInputError(f"Ambient dimension {nvars} leaves no room for the padding variable")
    ell = MultiPoly.variable(base.nvars, nvars, base.field)
    poly = ell ** (degree - m) * base.embed(nvars)
    return PaddedPoly(base, degree, nvars, poly)


@dataclass
class BlockStructure:
    corner: bool
    base_block: bool
    extra_block: bool
    cross_block: bool

    def holds(self) -> bool:
        return self.corner and self.base_block and self.extra_block and self.cross_block


def block_structure(padded: PaddedPoly) -> BlockStructure:
    """
    The block_structure function checks H_P against its closed form:
    (l, l) = c l^(d-m-2) R with c = (d-m)(d-m-1); the R-block is l^(d-m) H_R; rows of the
    variables P does not involve vanish; (u_i, l) = (d-m) l^(d-m-1) dR/du_i exactly.

    :param padded: PaddedPoly: P = l^(d-m) R with d - m >= 2
    :return: BlockStructure with one flag per block
    """
    pad = padded.pad
    if pad < 2:
        raise InvalidInputError("The block structure check needs d - m >= 2")
    n, size, ell_index = padded.nvars, padded.base.nvars, padded.ell
    field = padded.base.field
    matrix = hessian(padded.poly)
    base = padded.base.embed(n)
    ell = MultiPoly.variable(ell_index, n, field)

    corner = matrix[ell_index, ell_index] == (ell ** (pad - 2) * base).scale(pad * (pad - 1))

    base_hessian = hessian(padded.base) if padded.base.degree >= 2 else None
    base_block = True
    for i in range(size):
        for j in range(size):
            expected = (ell ** pad * base_hessian[i, j].embed(n)) if base_hessian else MultiPoly.zero(n, field)
            base_block = base_block and matrix[i, j] == expected

    extra_block = all(matrix[i, j].is_zero() for i in range(ell_index + 1, n) for j in range(n))

    cross_block = all(
        matrix[i, ell_index] == (ell ** (pad - 1) * base.partial_derivative(i)).scale(pad)
        for i in range(size)
    )
    return BlockStructure(corner, base_block, extra_block, cross_block)


@dataclass
class PaddedCheck:
    base_dims: list[int]
    padded_dims: list[int]
    blocks: Optional[BlockStructure]

    def holds(self) -> bool:
        same = self.base_dims == self.padded_dims
        return same and (self.blocks is None or self.blocks.holds())


def padded_dual_check(base: MultiPoly, degree: int, nvars: Optional[int] = None, trials: Optional[int] = None,
                      primes: Optional[Sequence[int]] = None, rng: Optional[Prng] = None) -> PaddedCheck:
    """
    The padded_dual_check function compares the Katz dimensions of R and l^(d-m) R at every
    prime, and checks the Hessian block structure when d - m >= 2.

    :return: PaddedCheck; holds() when every dimension agrees and the blocks match
    """
    trials = settings.default_trials if trials is None else trials
    primes = list(settings.default_primes if primes is None else primes)
    rng = rng or Prng(settings.default_seed)
    padded = padded_poly(base, degree, nvars)
    base_dims = [katz_dual_dim(base, trials, prime, rng) for prime in primes]
    # sampled points on l = 0 never reach the generic rank, so the padded side draws more
    padded_dims = [katz_dual_dim(padded.poly, trials * PADDED_TRIAL_FACTOR, prime, rng) for prime in primes]
    blocks = block_structure(padded) if padded.pad >= 2 else None
    logger.info("padding to degree %d: base dims %s, padded dims %s", degree, base_dims, padded_dims)
    return PaddedCheck(base_dims, padded_dims, blocks)
