"""
Flag-by-flag evaluation of the equations of Dual_{k,d,N}.

For a flag D < L < F with dim F = k + 3, let Q = det(H_P|_F) of degree e = (k+3)(d-2).
Restricted to L in coordinates (x, y) with D = {y = 0}, P divides Q on L for every P
whose dual has dimension <= k, and R-hat(Q_L, P_L) is the equation attached to the flag.
The equations are never expanded as polynomials in the coefficients of P.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence

from config_file import settings
from src.arith.matrix import ExactMatrix
from src.arith.prng import Prng
from src.arith.scalars import PrimeField, Scalar
from src.dual.euclid import DivisionResult, binary_euclid, rhat
from src.errors import InvalidInputError, LineAtInfinityError, SamplingExhaustedError
from src.poly.binary import BinaryForm
from src.poly.multipoly import LinearSubstitution, MultiPoly
from src.polarize.flag import Flag, random_flag
from src.polarize.hessian import hessian_at
from src.polarize.katz import katz_dual_dim
from src.polarize.sampling import faithful_prime

logger = logging.getLogger(__name__)


def q_degree(k: int, d: int) -> int:
    """e = deg Q = (k + 3)(d - 2)."""
    return (k + 3) * (d - 2)


def equation_degree(k: int, d: int) -> int:
    """Degree of the flag equation in the coefficients of P: (k + 2)(d - 1)."""
    return (k + 2) * (d - 1)


def _check(poly: MultiPoly, k: int, flag: Flag) -> int:
    d = poly.homogeneous_degree
    if d is None or d < 3:
        raise InvalidInputError("Dual equations are defined for homogeneous polynomials of degree >= 3")
    if k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}")
    if flag.dim != k + 3:
        raise InvalidInputError(f"F must have dimension k + 3 = {k + 3}, the flag has {flag.dim} columns")
    if flag.ambient != poly.nvars:
        raise InvalidInputError(f"Flag lives in dimension {flag.ambient}, polynomial in {poly.nvars} variables")
    return d


def line_forms(poly: MultiPoly, k: int, flag: Flag) -> tuple[BinaryForm, BinaryForm]:
    """
    The line_forms function returns (Q_L, P_L) for the flag.

    P_L(x, y) = P(x c_0 + y c_1), and Q_L is recovered by interpolation from the numeric
    determinants det(B^T H(c_0 + t c_1) B), B the columns of F.

    :param poly: MultiPoly: P of degree d >= 3
    :param k: int: Dual dimension bound, dim F = k + 3
    :param flag: Flag: The flag, over the field the evaluation runs in
    :return: The binary forms (Q_L, P_L) of degrees e and d
    :raises LineAtInfinityError: P(c_0) = 0
    """
    d = _check(poly, k, flag)
    field = flag.field
    reduced = poly if poly.field == field else poly.to_field(field)
    origin, direction = flag.line

    def along(t: Scalar) -> list[Scalar]:
        return [a + t * b for a, b in zip(origin, direction)]

    p_line = BinaryForm.from_line_values(d, lambda t: reduced.evaluate(along(t)), field)
    if p_line.leading == 0:
        raise LineAtInfinityError("P vanishes at the point D of the flag")
    basis = ExactMatrix.from_columns(flag.columns, field)
    basis_t = basis.transpose()
    q_line = BinaryForm.from_line_values(
        q_degree(k, d),
        lambda t: (basis_t @ hessian_at(reduced, along(t), field) @ basis).det(),
        field,
    )
    return q_line, p_line


def eval_dual_equation(poly: MultiPoly, k: int, flag: Flag) -> Scalar:
    """R-hat(Q_L, P_L): zero at every flag when dim Z(P)* <= k."""
    q_line, p_line = line_forms(poly, k, flag)
    return rhat(q_line, p_line)


def remainder_at(poly: MultiPoly, k: int, flag: Flag) -> DivisionResult:
    q_line, p_line = line_forms(poly, k, flag)
    return binary_euclid(q_line, p_line)


def full_remainder_check(poly: MultiPoly, k: int, flag: Flag) -> bool:
    """True iff P_L divides Q_L, i.e. the whole remainder vanishes, not only its top coefficient."""
    return remainder_at(poly, k, flag).remainder.is_zero()


@dataclass
class FlagFailure:
    prime: int
    trial: int
    flag: Flag
    remainder: BinaryForm


@dataclass
class MembershipVerdict:
    holds: bool
    k: int
    trials: int
    primes: list[int]
    seed: int
    resamples: int = 0
    witnesses: list[FlagFailure] = dataclass_field(default_factory=list)


def dual_membership(poly: MultiPoly, k: int, trials: Optional[int] = None,
                    primes: Optional[Sequence[int]] = None, rng: Optional[Prng] = None) -> MembershipVerdict:
    """
    The dual_membership function tests whether P satisfies the equations of Dual_{k,d,N}.

    Every (prime, trial) pair draws a random flag from rng.split(prime, trial) and checks that
    P_L divides Q_L. Flags with P(c_0) = 0 are redrawn. The verdict needs unanimity; each
    failing flag is kept as a witness.

    :param poly: MultiPoly: P of degree >= 3 in N variables
    :param k: int: Dual dimension bound, k + 3 <= N
    :param trials: Optional[int]: Flags per prime, settings.default_trials by default
    :param primes: Optional[Sequence[int]]: Primes, settings.default_primes by default; primes
        unlucky for P are replaced by the next faithful one, and verdict.primes lists those used
    :param rng: Optional[Prng]: Root generator, seeded with settings.default_seed by default
    :return: MembershipVerdict
    :raises SamplingExhaustedError: Every redraw for some trial put D on Z(P)
    """
    trials = settings.default_trials if trials is None else trials
    primes = list(settings.default_primes if primes is None else primes)
    rng = rng or Prng(settings.default_seed)
    if trials < 1:
        raise InvalidInputError("At least one trial is required")
    if k + 3 > poly.nvars:
        raise InvalidInputError(f"k + 3 = {k + 3} exceeds the number of variables {poly.nvars}")
    primes = [faithful_prime(poly, prime) for prime in primes]
    verdict = MembershipVerdict(True, k, trials, primes, rng.seed)
    for prime in primes:
        field = PrimeField(prime)
        reduced = poly.to_field(field)
        for trial in range(trials):
            stream = rng.split(prime, trial)
            for _ in range(settings.sampling_retries):
                flag = random_flag(poly.nvars, k + 3, field, stream)
                try:
                    result = remainder_at(reduced, k, flag)
                    break
                except LineAtInfinityError:
                    verdict.resamples += 1
                    logger.debug("seed %d, prime %d, trial %d: D lies on Z(P), resampling", rng.seed, prime, trial)
            else:
                raise SamplingExhaustedError(f"Could not draw a flag with P(D) != 0 mod {prime}")
            if not result.remainder.is_zero():
                verdict.holds = False
                verdict.witnesses.append(FlagFailure(prime, trial, flag, result.remainder))
                logger.info("seed %d, prime %d, trial %d: P_L does not divide Q_L", rng.seed, prime, trial)
    return verdict


def torus_exponents(k: int, d: int) -> tuple[int, int, int, int]:
    """Exponents of (t_x, t_y, t_z, t_w) by which the flag equation transforms."""
    e = q_degree(k, d)
    return 2 + e + (d - 1) * (e - d + 1), e - d + 3, 2 * (k + 1), 0


def torus_action(poly: MultiPoly, flag: Flag, t_x, t_y, t_z, t_w) -> MultiPoly:
    """
    (T P)(v) = P(T v), where T scales the flag-adapted basis: the first column by t_x, the
    second by t_y, the rest of F by t_z and the completion of F by t_w.
    """
    field = flag.field
    scalars = [field.coerce(t) for t in (t_x, t_y, t_z, t_w)]
    if any(t == 0 for t in scalars):
        raise InvalidInputError("Torus parameters must be nonzero")
    t_x, t_y, t_z, t_w = scalars
    basis = flag.adapted_basis()
    n = flag.ambient
    weights = [t_x, t_y] + [t_z] * (flag.dim - 2) + [t_w] * (n - flag.dim)
    diagonal = ExactMatrix([[weights[i] if i == j else field.zero for j in range(n)] for i in range(n)], field)
    transform = basis @ diagonal @ basis.inverse()
    reduced = poly if poly.field == field else poly.to_field(field)
    return reduced.substitute(LinearSubstitution(transform))


def weight_covariance_check(poly: MultiPoly, k: int, flag: Flag, t_x, t_y, t_z, t_w) -> bool:
    """
    The weight_covariance_check function verifies that the flag equation is a weight vector
    for the torus adapted to the flag.

    :return: True iff E(T P) = t_x^(2+e+(d-1)(e-d+1)) t_y^(e-d+3) t_z^(2(k+1)) E(P)
    """
    d = _check(poly, k, flag)
    field = flag.field
    ex, ey, ez, _ = torus_exponents(k, d)
    left = eval_dual_equation(torus_action(poly, flag, t_x, t_y, t_z, t_w), k, flag)
    factor = field.coerce(t_x) ** ex * field.coerce(t_y) ** ey * field.coerce(t_z) ** ez
    return left == factor * eval_dual_equation(poly, k, flag)


def homogeneity_check(poly: MultiPoly, k: int, flag: Flag, lam) -> bool:
    """E(lam P) = lam^((k+2)(d-1)) E(P)."""
    d = _check(poly, k, flag)
    lam = flag.field.coerce(lam)
    scaled = poly.to_field(flag.field).scale(lam)
    return eval_dual_equation(scaled, k, flag) == lam ** equation_degree(k, d) * eval_dual_equation(poly, k, flag)


def dc_bound_from_dual_dim(dual_dim: int) -> int:
    """ceil((dim Z(P)* + 1) / 2)."""
    return -(-(dual_dim + 1) // 2)


def dc_lower_bound(poly: MultiPoly, trials: Optional[int] = None, primes: Optional[Sequence[int]] = None,
                   rng: Optional[Prng] = None) -> int:
    """
    The dc_lower_bound function bounds the border determinantal complexity of an irreducible P
    from below by ceil((dim Z(P)* + 1) / 2), the dual dimension taken from Katz sampling.

    :return: The bound, from the largest Katz value seen across the primes
    """
    trials = settings.default_trials if trials is None else trials
    primes = list(settings.default_primes if primes is None else primes)
    rng = rng or Prng(settings.default_seed)
    dual_dim = max(katz_dual_dim(poly, trials, prime, rng) for prime in primes)
    return dc_bound_from_dual_dim(dual_dim)
