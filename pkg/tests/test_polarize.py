from collections import Counter

import pytest

from src.arith.matrix import ExactMatrix
from src.arith.prng import Prng
from src.arith.scalars import QQ, PrimeField
from src.errors import DegenerateFlagError, InvalidInputError, SamplingExhaustedError
from src.models.matrix_space import det_poly
from src.models.subspace import random_form
from src.poly.binary import interpolate
from src.poly.multipoly import MultiPoly
from src.poly.text import parse_poly
from src.polarize.flag import Flag, random_flag
from src.polarize.hessian import (
    hessian,
    hessian_at,
    mixed_hessian_det,
    restrict_hessian,
    restricted_hessian_at,
)
from src.polarize.katz import hessian_rank_samples, katz_dual_dim
from src.polarize.sampling import (
    faithful_prime,
    has_repeated_root,
    repeated_factor_suspected,
    roots_mod_p,
    sample_on_hypersurface,
)

PRIMES = (10007, 32003)


def test_hessian_entries():
    matrix = hessian(parse_poly("x0^3 + x0*x1*x2"))
    assert matrix[0, 0] == parse_poly("6*x0", nvars=3)
    assert matrix[1, 2] == parse_poly("x0", nvars=3)
    assert matrix[1, 1].is_zero()
    assert matrix.is_symmetric()


def test_hessian_needs_a_form_of_degree_two():
    with pytest.raises(InvalidInputError):
        hessian(parse_poly("x0 + x1"))
    with pytest.raises(InvalidInputError):
        hessian(parse_poly("x0^3 + x1^2"))


def test_hessian_at_matches_symbolic_hessian(det3):
    rng = Prng(31)
    symbolic = hessian(det3)
    for _ in range(3):
        point = [QQ.random_element(rng) for _ in range(9)]
        assert hessian_at(det3, point) == symbolic.at(point)


def test_hessian_at_reduces_into_the_field(det3, gf):
    point = list(range(9))
    assert hessian_at(det3, point, gf) == ExactMatrix(hessian_at(det3, point).rows, gf)


def test_restricted_hessian():
    rng = Prng(32)
    poly = random_form(3, 4, rng)
    columns = [[1, 0, 2, 0], [0, 1, 1, 1], [3, 0, 0, 1]]
    point = [2, -1, 5, 3]
    restricted = restrict_hessian(hessian(poly), columns)
    assert restricted.size == 3
    assert restricted.at(point) == restricted_hessian_at(poly, columns, point)
    with pytest.raises(DegenerateFlagError):
        restrict_hessian(hessian(poly), [[1, 0, 0, 0], [2, 0, 0, 0]])


def test_mixed_hessian_det_is_the_first_order_term():
    for seed in range(20):
        rng = Prng(100 + seed)
        poly, direction = random_form(3, 4, rng), random_form(3, 4, rng)
        columns = [[QQ.random_element(rng) for _ in range(4)] for _ in range(3)]
        point = [QQ.random_element(rng) for _ in range(4)]
        mixed = mixed_hessian_det(poly, direction, columns)
        values = [restricted_hessian_at(poly + direction.scale(eps), columns, point).det() for eps in range(4)]
        assert mixed.evaluate(point) == interpolate(range(4), values, QQ)[1]


def test_mixed_hessian_det_along_p_itself():
    rng = Prng(120)
    poly = random_form(3, 4, rng)
    columns = [[QQ.random_element(rng) for _ in range(4)] for _ in range(3)]
    restricted = restrict_hessian(hessian(poly), columns).det()
    assert mixed_hessian_det(poly, poly, columns) == restricted.scale(3)


def test_mixed_hessian_det_is_linear_in_the_direction():
    for seed in range(5):
        rng = Prng(140 + seed)
        poly, first, second = (random_form(3, 4, rng) for _ in range(3))
        columns = [[QQ.random_element(rng) for _ in range(4)] for _ in range(3)]
        a, b = QQ.random_nonzero(rng), QQ.random_nonzero(rng)
        combined = mixed_hessian_det(poly, first.scale(a) + second.scale(b), columns)
        expected = mixed_hessian_det(poly, first, columns).scale(a) + mixed_hessian_det(poly, second, columns).scale(b)
        assert combined == expected


def test_mixed_hessian_det_edge_cases(det3):
    columns = [[1 if i == j else 0 for i in range(9)] for j in range(3)]
    assert mixed_hessian_det(det3, MultiPoly.zero(9), columns).is_zero()
    with pytest.raises(InvalidInputError):
        mixed_hessian_det(det3, parse_poly("x0^2", nvars=9), columns)


def test_flag_validation(gf):
    with pytest.raises(DegenerateFlagError):
        Flag.from_columns([[1, 0, 0]], gf)
    with pytest.raises(DegenerateFlagError):
        Flag.from_columns([[1, 2, 3], [2, 4, 6]], gf)
    flag = Flag.from_columns([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 0]], gf)
    assert (flag.ambient, flag.dim, flag.k) == (4, 3, 0)
    assert flag.point == (1, 0, 0, 0)


def test_adapted_basis_extends_the_flag(gf, rng):
    flag = random_flag(6, 4, gf, rng)
    basis = flag.adapted_basis()
    assert basis.rank() == 6
    assert [tuple(c) for c in basis.columns()[:4]] == list(flag.columns)


def test_random_flag_dimension(gf, rng):
    with pytest.raises(InvalidInputError):
        random_flag(3, 4, gf, rng)


def test_sampled_points_lie_on_the_hypersurface(det3):
    for prime in PRIMES:
        field = PrimeField(prime)
        sample = sample_on_hypersurface(det3, prime, Prng(7))
        assert det3.to_field(field).evaluate(list(sample.point)) == 0
        assert sample.point == sample_on_hypersurface(det3, prime, Prng(7)).point


def test_sampled_points_on_the_permanent(perm2):
    field = PrimeField(10007)
    for seed in range(5):
        x = sample_on_hypersurface(perm2, 10007, Prng(seed)).point
        assert x[0] * x[3] + x[1] * x[2] == field.zero


@pytest.mark.slow
def test_sampled_determinant_points_have_rank_two(det3):
    field = PrimeField(10007)
    ranks = Counter()
    for seed in range(100):
        x = sample_on_hypersurface(det3, 10007, Prng(seed)).point
        assert det3.to_field(field).evaluate(list(x)) == 0
        ranks[ExactMatrix([x[0:3], x[3:6], x[6:9]], field).rank()] += 1
    assert ranks[2] >= 95
    assert set(ranks) <= {1, 2}


def test_sampling_fails_when_p_kills_the_polynomial():
    with pytest.raises(SamplingExhaustedError):
        sample_on_hypersurface(parse_poly("10007*x0^2 + 10007*x1^2"), 10007, Prng(0))


def test_faithful_prime_skips_primes_that_lose_a_coefficient():
    assert faithful_prime(parse_poly("10007*x0^2 + x1^2"), 10007) == 10009
    assert faithful_prime(parse_poly("1/10007*x0^2 + x1^2"), 10007) == 10009
    assert faithful_prime(parse_poly("x0^2 + x1^2"), 10007) == 10007
    reduced = parse_poly("x0^2 + x1^2").to_field(PrimeField(10007))
    assert faithful_prime(reduced, 10007) == 10007


def test_faithful_prime_gives_up_after_the_retries():
    with pytest.raises(SamplingExhaustedError):
        faithful_prime(parse_poly("10007*x0^2"), 10007, retries=0)
    assert faithful_prime(parse_poly("100160063*x0^2 + x1^2"), 10007, retries=2) == 10037


def test_rank_samples_use_the_faithful_prime():
    sample = hessian_rank_samples(parse_poly("10007*x0^2 + 10007*x1^2"), 2, 10007, Prng(0))
    assert sample.prime == 10009
    assert sample.ranks == [2, 2]


def test_roots_mod_p():
    field = PrimeField(7)
    assert roots_mod_p([field.coerce(-1), field.zero, field.one], 7) == [1, 6]
    assert roots_mod_p([field.one, field.zero, field.one], 7) == []


def test_repeated_roots():
    field = PrimeField(7)
    assert has_repeated_root([field.one, field.coerce(-2), field.one], 7)
    assert not has_repeated_root([field.coerce(-1), field.zero, field.one], 7)


def test_repeated_factor_heuristic(perm2, perm2_squared):
    assert repeated_factor_suspected(perm2_squared, 10007, Prng(3))
    assert not repeated_factor_suspected(perm2, 10007, Prng(3))


def test_rank_samples_are_reproducible(det3):
    first = hessian_rank_samples(det3, 4, 10007, Prng(9))
    second = hessian_rank_samples(det3, 4, 10007, Prng(9))
    assert first.ranks == second.ranks
    assert sum(first.histogram.values()) == 4
    with pytest.raises(InvalidInputError):
        hessian_rank_samples(det3, 0, 10007, Prng(9))


@pytest.mark.parametrize('n', [3, 4])
def test_katz_determinant(n):
    poly = det_poly(n).poly
    for prime in PRIMES:
        assert katz_dual_dim(poly, 8, prime, Prng(0)) == 2 * n - 2


@pytest.mark.slow
def test_katz_determinant_five():
    poly = det_poly(5).poly
    for prime in PRIMES:
        assert katz_dual_dim(poly, 8, prime, Prng(0)) == 8


def test_katz_permanent(perm2, perm3):
    for prime in PRIMES:
        assert katz_dual_dim(perm2, 8, prime, Prng(0)) == 2
        assert katz_dual_dim(perm3, 8, prime, Prng(0)) == 7


def test_katz_smooth_quadrics(conic):
    assert katz_dual_dim(conic, 8, 10007, Prng(0)) == 1
    quadric = parse_poly("x0*x1 + x2*x3 + x4^2")
    assert katz_dual_dim(quadric, 8, 10007, Prng(0)) == 3


def test_katz_agrees_across_primes_on_plane_cubics():
    for seed in range(5):
        cubic = random_form(3, 3, Prng(seed))
        dims = {katz_dual_dim(cubic, 8, prime, Prng(seed)) for prime in PRIMES}
        assert dims == {1}
