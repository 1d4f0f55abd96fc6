import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy import Poly, Symbol, nextprime

from config_file import settings
from src.arith.prng import Prng
from src.arith.scalars import QQ, ModP, PrimeField
from src.errors import SamplingExhaustedError
from src.poly.binary import interpolate
from src.poly.multipoly import MultiPoly

logger = logging.getLogger(__name__)

_t = Symbol('t')


@dataclass(frozen=True)
class SampledPoint:
    """A point w with P(w) = 0 in GF(p), found on the affine line a + t b."""
    point: tuple[ModP, ...]
    prime: int
    line_origin: tuple[ModP, ...]
    line_direction: tuple[ModP, ...]
    parameter: int
    attempts: int

    def as_ints(self) -> list[int]:
        return [int(v) for v in self.point]


def line_restriction(poly: MultiPoly, origin: Sequence, direction: Sequence, field: PrimeField) -> list[ModP]:
    """
    Coefficients (ascending in t) of t -> P(a + t b), recovered from deg P + 1 values.
    """
    degree = max(poly.degree, 0)
    points = list(range(degree + 1))
    values = [poly.evaluate([a + t * b for a, b in zip(origin, direction)]) for t in points]
    return interpolate(points, values, field)


def roots_mod_p(coefficients: Sequence[ModP], prime: int) -> list[int]:
    """All t in F_p where the univariate polynomial vanishes, by a full scan with Horner."""
    ints = [int(c) for c in reversed(coefficients)]
    roots = []
    for t in range(prime):
        value = 0
        for c in ints:
            value = (value * t + c) % prime
        if value == 0:
            roots.append(t)
    return roots


def _reduces_faithfully(poly: MultiPoly, prime: int) -> bool:
    return all(c.numerator % prime and c.denominator % prime for c in poly.terms.values())


def faithful_prime(poly: MultiPoly, prime: int, retries: Optional[int] = None) -> int:
    """
    The faithful_prime function moves past unlucky primes: a prime is unlucky for P when a
    coefficient of P vanishes mod p or has no image mod p. Polynomials already over a prime
    field are returned unchanged.

    :param poly: MultiPoly: P
    :param prime: int: The requested prime
    :param retries: Optional[int]: Larger primes to try; settings.prime_retries by default
    :return: The first prime >= prime that reduces P without losing a term
    :raises SamplingExhaustedError: The requested prime and every retry are unlucky
    """
    if poly.field != QQ:
        return prime
    retries = settings.prime_retries if retries is None else retries
    candidate = prime
    for _ in range(retries + 1):
        if _reduces_faithfully(poly, candidate):
            if candidate != prime:
                logger.warning("prime %d is unlucky for P, working mod %d instead", prime, candidate)
            return candidate
        logger.debug("P loses a coefficient mod %d", candidate)
        candidate = nextprime(candidate)
    raise SamplingExhaustedError(f"P loses a coefficient mod {prime} and the next {retries} primes")


def sample_on_hypersurface(poly: MultiPoly, prime: int, rng: Prng,
                           retries: Optional[int] = None) -> SampledPoint:
    """
    The sample_on_hypersurface function finds a point of the affine cone over Z(P) mod p.

    Draws random lines t -> a + t b, scans every t in F_p for roots of the restriction and
    picks one of them at random. A line contained in Z(P) accepts every t.

    :param poly: MultiPoly: P, nonzero mod p
    :param prime: int: The sampling prime
    :param rng: Prng: Generator for the lines and the root choice
    :param retries: Optional[int]: Number of lines to try; settings.sampling_retries by default
    :return: SampledPoint with P(w) = 0 in GF(p)
    :raises SamplingExhaustedError: P vanishes identically mod p, or no line met Z(P)
    """
    field = PrimeField(prime)
    reduced = poly.to_field(field)
    if reduced.is_zero():
        raise SamplingExhaustedError(f"Polynomial vanishes identically mod {prime}; try another prime")
    retries = retries or settings.sampling_retries
    n = poly.nvars
    for attempt in range(1, retries + 1):
        origin = [field.random_element(rng) for _ in range(n)]
        direction = [field.random_element(rng) for _ in range(n)]
        coefficients = line_restriction(reduced, origin, direction, field)
        if all(c == 0 for c in coefficients):
            parameter = rng.randbelow(prime)
        else:
            roots = roots_mod_p(coefficients, prime)
            if not roots:
                logger.debug("prime %d: line %d misses the hypersurface, resampling", prime, attempt)
                continue
            parameter = rng.choice(roots)
        point = tuple(a + direction[i] * parameter for i, a in enumerate(origin))
        return SampledPoint(point, prime, tuple(origin), tuple(direction), parameter, attempt)
    raise SamplingExhaustedError(f"No point of the hypersurface found mod {prime} after {retries} lines")


def has_repeated_root(coefficients: Sequence[ModP], prime: int) -> bool:
    """True iff gcd(f, f') is nonconstant over GF(p); a zero f counts as repeated."""
    ints = [int(c) for c in reversed(coefficients)]
    f = Poly.from_list(ints, _t, modulus=prime)
    if f.is_zero:
        return True
    if f.degree() <= 0:
        return False
    return f.gcd(f.diff(_t)).degree() > 0


def repeated_factor_suspected(poly: MultiPoly, prime: int, rng: Prng, samples: int = 4) -> bool:
    """
    The repeated_factor_suspected function looks for a square factor of P by chance.

    A squarefree P restricts to squarefree univariate polynomials on a random line with
    high probability, while P = R^2 S never does. Suspicion is reported only when every
    sampled restriction has a repeated root.

    :param poly: MultiPoly: P of degree >= 1
    :param prime: int: The prime the restrictions are reduced modulo
    :param rng: Prng: Generator for the lines
    :param samples: int: Number of random lines
    :return: True when all restrictions have a repeated root
    """
    field = PrimeField(prime)
    reduced = poly.to_field(field)
    if reduced.degree < 2:
        return False
    n = poly.nvars
    for _ in range(samples):
        origin = [field.random_element(rng) for _ in range(n)]
        direction = [field.random_element(rng) for _ in range(n)]
        if not has_repeated_root(line_restriction(reduced, origin, direction, field), prime):
            return False
    logger.debug("all %d line restrictions mod %d have repeated roots", samples, prime)
    return True
