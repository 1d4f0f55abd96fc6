"""
The Hessian of det_n at a matrix w of rank n - 1, and the tangent condition it imposes.

The kernel of H_{det,w} consists of the X with Im X in Im w, Ker X containing Ker w and
tr(G X) = 0, where G is any generalized inverse of w (w G w = w). On the first two
conditions X = w Y w, so tr(G X) = tr(w Y) does not depend on the choice of G.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence

from config_file import settings
from src.arith.matrix import ExactMatrix, generalized_inverse, kernel_basis
from src.arith.prng import Prng
from src.arith.scalars import Field, PrimeField, Scalar
from src.errors import InvalidInputError, SamplingExhaustedError
from src.models.matrix_space import det_poly, flatten, matrix_size, unflatten, variable_index
from src.poly.binary import interpolate
from src.poly.multipoly import MultiPoly
from src.polarize.hessian import hessian_at
from src.polarize.sampling import faithful_prime, roots_mod_p

logger = logging.getLogger(__name__)


def _check_corank_one(w: ExactMatrix) -> int:
    n = w.nrows
    if w.ncols != n:
        raise InvalidInputError("w must be a square matrix")
    if w.rank() != n - 1:
        raise InvalidInputError(f"w must have rank n - 1 = {n - 1}, it has rank {w.rank()}")
    return n


def det_hessian_form(w: ExactMatrix) -> ExactMatrix:
    """
    The det_hessian_form function returns the numeric Hessian of det_n at w, an n^2 x n^2
    matrix in the row-major flattening.

    :param w: ExactMatrix: n x n matrix of rank n - 1
    :return: H_{det,w}
    :raises InvalidInputError: rank w != n - 1
    """
    n = _check_corank_one(w)
    return hessian_at(det_poly(n).poly, flatten(w), w.field)


def det_hessian_kernel(w: ExactMatrix) -> ExactMatrix:
    """Kernel of H_{det,w} as n^2-long columns; (n - 1)^2 - 1 of them."""
    return kernel_basis(det_hessian_form(w))


def kernel_conditions(w: ExactMatrix) -> ExactMatrix:
    """
    Linear conditions on vec(X), one per row: u^T X = 0 for u spanning Ker w^T,
    X v = 0 for v spanning Ker w, and tr(G X) = 0.
    """
    n = _check_corank_one(w)
    field = w.field
    rows = []
    for u in kernel_basis(w.transpose()).columns():
        for j in range(n):
            row = [field.zero] * (n * n)
            for i in range(n):
                row[variable_index(i, j, n)] = u[i]
            rows.append(row)
    for v in kernel_basis(w).columns():
        for i in range(n):
            row = [field.zero] * (n * n)
            for j in range(n):
                row[variable_index(i, j, n)] = v[j]
            rows.append(row)
    inverse = generalized_inverse(w)
    rows.append([inverse[j, i] for i in range(n) for j in range(n)])
    return ExactMatrix(rows, field, ncols=n * n)


def satisfies_kernel_conditions(w: ExactMatrix, x: ExactMatrix) -> bool:
    """Im X in Im w, Ker X contains Ker w, and tr(G X) = 0."""
    n = _check_corank_one(w)
    columns = w.columns() + x.columns()
    image = ExactMatrix.from_columns(columns, w.field).rank() == n - 1
    kernel = all(all(value == 0 for value in x.apply(v)) for v in kernel_basis(w).columns())
    product = generalized_inverse(w) @ x
    trace = sum((product[j, j] for j in range(n)), w.field.zero)
    return image and kernel and trace == 0


def _random_matrix(nrows: int, ncols: int, field: Field, rng: Prng) -> ExactMatrix:
    return ExactMatrix([[field.random_element(rng) for _ in range(ncols)] for _ in range(nrows)], field, ncols=ncols)


def random_corank_one(n: int, field: Field, rng: Prng) -> ExactMatrix:
    """U V^T with U, V random n x (n - 1), redrawn until the rank is exactly n - 1."""
    for _ in range(settings.sampling_retries):
        w = _random_matrix(n, n - 1, field, rng) @ _random_matrix(n, n - 1, field, rng).transpose()
        if w.rank() == n - 1:
            return w
    raise SamplingExhaustedError(f"No rank {n - 1} matrix drawn in {settings.sampling_retries} attempts")


def orbit_tangent(n: int, u: ExactMatrix) -> MultiPoly:
    """
    The orbit_tangent function returns d/dt det_n(x + t u x) at t = 0, the tangent to the
    GL(W)-orbit of det_n along u in End(W).

    :param n: int: Matrix size
    :param u: ExactMatrix: n^2 x n^2 matrix acting on the flattened coordinates
    :return: sum_a (u x)_a d(det_n)/dx_a, a form of degree n
    """
    det = det_poly(n).poly
    size = n * n
    if u.shape != (size, size):
        raise InvalidInputError(f"u must be {size} x {size}")
    field = det.field
    total = MultiPoly.zero(size, field)
    for a in range(size):
        partial = det.partial_derivative(a)
        if partial.is_zero():
            continue
        image = MultiPoly.linear_form([u[a, b] for b in range(size)], field)
        if not image.is_zero():
            total = total + image * partial
    return total


def random_orbit_tangent(n: int, rng: Prng) -> MultiPoly:
    size = n * n
    return orbit_tangent(n, _random_matrix(size, size, det_poly(n).poly.field, rng))


@dataclass
class TangentFailure:
    prime: int
    trial: int
    point: list[Scalar]
    direction: list[Scalar]
    value: Scalar


@dataclass
class TangentVerdict:
    passed: bool
    trials: int
    prime: int
    seed: int
    witnesses: list[TangentFailure] = dataclass_field(default_factory=list)


def _point_on_both(direction: MultiPoly, n: int, field: PrimeField, rng: Prng) -> ExactMatrix:
    """
    A matrix of rank n - 1 with pi(w) = 0: w(t) = (U_0 + t U_1) V^T has rank <= n - 1 for
    all t, and t -> pi(w(t)) has degree <= n, so its roots are found by a scan of F_p.
    """
    prime = field.p
    for attempt in range(settings.sampling_retries):
        v = _random_matrix(n, n - 1, field, rng).transpose()
        a = _random_matrix(n, n - 1, field, rng) @ v
        b = _random_matrix(n, n - 1, field, rng) @ v

        def at(t) -> list:
            return [x + t * y for x, y in zip(flatten(a), flatten(b))]

        points = list(range(n + 1))
        coefficients = interpolate(points, [direction.evaluate(at(t)) for t in points], field)
        if all(c == 0 for c in coefficients):
            parameter = rng.randbelow(prime)
        else:
            roots = roots_mod_p(coefficients, prime)
            if not roots:
                logger.debug("prime %d: pencil %d misses Z(pi), resampling", prime, attempt)
                continue
            parameter = rng.choice(roots)
        w = unflatten(at(field.coerce(parameter)), field)
        if w.rank() == n - 1:
            return w
    raise SamplingExhaustedError(f"No rank {n - 1} point of Z(pi) found mod {prime}")


def tangent_condition_check(direction: MultiPoly, trials: Optional[int] = None, prime: Optional[int] = None,
                            rng: Optional[Prng] = None) -> TangentVerdict:
    """
    The tangent_condition_check function tests whether pi lies in the Zariski tangent space
    of the orbit closure of det_n: at rank n - 1 points w with pi(w) = 0, the Hessian of pi
    must vanish on the kernel of H_{det,w}.

    A failure is certified by a kernel vector X with X^T H_pi(w) X != 0, taken as a basis
    vector k_i or as k_i + k_j.

    :param direction: MultiPoly: pi, of degree n on M_n
    :param trials: Optional[int]: Sampled points, settings.default_trials by default
    :param prime: Optional[int]: Sampling prime, the first default prime by default
    :param rng: Optional[Prng]: Root generator
    :return: TangentVerdict with witnesses (w, X, X^T H_pi(w) X) on failure
    :raises SamplingExhaustedError: No rank n - 1 point of Z(pi) was found
    """
    trials = settings.default_trials if trials is None else trials
    prime = settings.default_primes[0] if prime is None else prime
    rng = rng or Prng(settings.default_seed)
    n = matrix_size(direction.nvars)
    if direction.homogeneous_degree != n:
        raise InvalidInputError(f"pi must be a form of degree {n} on M_{n}")
    prime = faithful_prime(direction, prime)
    field = PrimeField(prime)
    reduced = direction.to_field(field)
    verdict = TangentVerdict(True, trials, prime, rng.seed)
    for trial in range(trials):
        stream = rng.split(prime, trial)
        w = _point_on_both(reduced, n, field, stream)
        kernel = det_hessian_kernel(w)
        if kernel.ncols == 0:
            continue
        form = kernel.transpose() @ hessian_at(reduced, flatten(w), field) @ kernel
        witness = _witness(form, kernel)
        if witness is not None:
            x, value = witness
            verdict.passed = False
            verdict.witnesses.append(TangentFailure(prime, trial, flatten(w), x, value))
            logger.info("seed %d, prime %d, trial %d: Hessian of pi is nonzero on the kernel", rng.seed, prime, trial)
    return verdict


def _witness(form: ExactMatrix, kernel: ExactMatrix) -> Optional[tuple[list[Scalar], Scalar]]:
    size = form.nrows
    for i in range(size):
        if form[i, i] != 0:
            return kernel.column(i), form[i, i]
    for i in range(size):
        for j in range(i + 1, size):
            if form[i, j] != 0:
                x = [a + b for a, b in zip(kernel.column(i), kernel.column(j))]
                return x, form[i, j] * 2
    return None


def quadratic_value(matrix: ExactMatrix, x: Sequence) -> Scalar:
    """x^T M x."""
    image = matrix.apply(x)
    return sum((a * b for a, b in zip(x, image)), matrix.field.zero)


@dataclass
class TangentRatio:
    first: Scalar
    second: Scalar

    @property
    def agree(self) -> bool:
        return self.first == self.second


def tangent_ratio(first: MultiPoly, second: MultiPoly, n: int, rng: Prng,
                  prime: Optional[int] = None) -> TangentRatio:
    """
    The tangent_ratio function measures c_{X,w} = H_{pi,w}(X) / pi(w) for two directions at the
    same rank n - 1 point w and kernel vector X. Orbit tangents give equal ratios.

    :return: TangentRatio with both ratios
    """
    prime = settings.default_primes[0] if prime is None else prime
    field = PrimeField(prime)
    first, second = first.to_field(field), second.to_field(field)
    for _ in range(settings.sampling_retries):
        w = random_corank_one(n, field, rng)
        point = flatten(w)
        first_value, second_value = first.evaluate(point), second.evaluate(point)
        if first_value == 0 or second_value == 0:
            continue
        kernel = det_hessian_kernel(w)
        if kernel.ncols == 0:
            raise InvalidInputError(f"The kernel is trivial for n = {n}")
        weights = [field.random_element(rng) for _ in range(kernel.ncols)]
        x = kernel.apply(weights)
        return TangentRatio(
            quadratic_value(hessian_at(first, point, field), x) / first_value,
            quadratic_value(hessian_at(second, point, field), x) / second_value,
        )
    raise SamplingExhaustedError("Both directions vanish at every sampled point")
