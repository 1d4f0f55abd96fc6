"""
Katz dimension formula: dim Z(P)* = rank H(w) - 2 at a general point w of the cone over
Z(P). The formula assumes P irreducible. For a non-reduced P (a multiple of R^2) the
Hessian degenerates along Z(P) and the rank says nothing about Z(R)*; repeated_factor_suspected
flags that case.
"""
import logging
from collections import Counter
from dataclasses import dataclass

from src.arith.prng import Prng
from src.arith.scalars import PrimeField
from src.errors import InvalidInputError
from src.poly.multipoly import MultiPoly
from src.polarize.hessian import hessian_at
from src.polarize.sampling import faithful_prime, sample_on_hypersurface

logger = logging.getLogger(__name__)


@dataclass
class RankSample:
    prime: int
    ranks: list[int]

    @property
    def generic_rank(self) -> int:
        return max(self.ranks)

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.ranks).items()))


def hessian_rank_samples(poly: MultiPoly, trials: int, prime: int, rng: Prng) -> RankSample:
    """
    The hessian_rank_samples function samples rank H(w) at random points of Z(P) mod p.

    Trial i draws from the substream rng.split(prime, i), so each trial is reproducible
    on its own.

    :param poly: MultiPoly: Homogeneous P of degree >= 2
    :param trials: int: Number of sampled points, at least one
    :param prime: int: Sampling prime, moved up past primes unlucky for P
    :param rng: Prng: Root generator of the run
    :return: RankSample with one rank per trial, labelled by the prime actually used
    """
    if trials < 1:
        raise InvalidInputError("At least one trial is required")
    if poly.homogeneous_degree is None or poly.homogeneous_degree < 2:
        raise InvalidInputError("Katz sampling needs a homogeneous polynomial of degree >= 2")
    prime = faithful_prime(poly, prime)
    field = PrimeField(prime)
    reduced = poly.to_field(field)
    ranks = []
    for trial in range(trials):
        sample = sample_on_hypersurface(reduced, prime, rng.split(prime, trial))
        rank = hessian_at(reduced, sample.point, field).rank()
        logger.debug("seed %d, prime %d, trial %d: rank %d", rng.seed, prime, trial, rank)
        ranks.append(rank)
    return RankSample(prime, ranks)


def generic_hessian_rank(poly: MultiPoly, trials: int, prime: int, rng: Prng) -> int:
    """Max of the sampled ranks; rank is lower semicontinuous, so the max is the generic rank."""
    return hessian_rank_samples(poly, trials, prime, rng).generic_rank


def katz_dual_dim(poly: MultiPoly, trials: int, prime: int, rng: Prng) -> int:
    return generic_hessian_rank(poly, trials, prime, rng) - 2
