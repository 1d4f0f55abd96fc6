import pytest

from src.arith.prng import Prng
from src.arith.scalars import QQ, PrimeField
from src.dual.equations import (
    dc_bound_from_dual_dim,
    dc_lower_bound,
    dual_membership,
    equation_degree,
    eval_dual_equation,
    full_remainder_check,
    homogeneity_check,
    line_forms,
    q_degree,
    torus_exponents,
    weight_covariance_check,
)
from src.dual.euclid import binary_euclid, rhat, rhat_scaling_check, series_coefficient
from src.dual.weights import omega_weight, stated_det_weight
from src.errors import InvalidInputError, LineAtInfinityError
from src.models.padded import padded_poly
from src.models.pfaffian import p_lambda
from src.models.subspace import random_form
from src.poly.binary import BinaryForm
from src.polarize.flag import random_flag


def random_binary(rng, degree, field=QQ):
    coeffs = [field.random_element(rng) for _ in range(degree)] + [field.random_nonzero(rng)]
    return BinaryForm(coeffs, field)


def random_pairs(count, seed=0):
    rng = Prng(seed)
    for _ in range(count):
        d = rng.randint(1, 4)
        e = rng.randint(d, 8)
        yield random_binary(rng, e), random_binary(rng, d), rng


def test_division_reassembles_the_dividend():
    for q, p, _ in random_pairs(20):
        result = binary_euclid(q, p)
        shift = q.degree - p.degree + 1
        assert result.quotient.degree == q.degree - p.degree
        assert result.remainder.degree == p.degree - 1
        assert p * result.quotient + result.remainder.times_y_power(shift) == q


def test_division_by_a_divisor_leaves_no_remainder():
    rng = Prng(1)
    p, d = random_binary(rng, 3), random_binary(rng, 2)
    assert binary_euclid(p * d, p).remainder.is_zero()
    assert rhat(p * d, p) == 0


def test_rhat_is_the_scaled_top_remainder():
    for q, p, _ in random_pairs(50, seed=2):
        top = binary_euclid(q, p).top_remainder
        assert rhat(q, p) == p.leading ** (q.degree - p.degree + 1) * top


def test_rhat_matches_power_series_division():
    for q, p, _ in random_pairs(50, seed=3):
        index = q.degree - p.degree + 1
        expected = p.leading ** (index + 1) * series_coefficient(q, p, index)
        assert rhat(q, p) == expected


def test_rhat_scaling():
    for q, p, rng in random_pairs(50, seed=4):
        alpha, beta, lam = (QQ.random_nonzero(rng) for _ in range(3))
        assert rhat_scaling_check(q, p, alpha, beta, lam)


def test_rhat_over_a_prime_field():
    field = PrimeField(10007)
    rng = Prng(5)
    q, p = random_binary(rng, 6, field), random_binary(rng, 3, field)
    top = binary_euclid(q, p).top_remainder
    assert rhat(q, p) == p.leading ** 4 * top


def test_rhat_scaling_over_a_prime_field():
    field = PrimeField(10007)
    rng = Prng(9)
    q, p = random_binary(rng, 7, field), random_binary(rng, 3, field)
    for _ in range(20):
        alpha, beta, lam = (field.random_nonzero(rng) for _ in range(3))
        assert rhat_scaling_check(q, p, alpha, beta, lam)


def test_division_preconditions():
    q, p = BinaryForm([1, 2, 3], QQ), BinaryForm([1, 0], QQ)
    with pytest.raises(LineAtInfinityError):
        binary_euclid(q, p)
    with pytest.raises(LineAtInfinityError):
        rhat(q, p)
    with pytest.raises(InvalidInputError):
        binary_euclid(BinaryForm([1, 1], QQ), BinaryForm([1, 1, 1], QQ))


def test_degrees_and_torus_exponents():
    assert q_degree(4, 3) == 7
    assert q_degree(6, 4) == 18
    assert q_degree(6, 3) == 9
    assert equation_degree(4, 3) == 12
    assert equation_degree(6, 3) == 16
    assert equation_degree(6, 3) == omega_weight(6, 3).degree
    assert torus_exponents(1, 3) == (10, 4, 4, 0)


def test_line_forms_have_the_right_degrees(det3, gf, rng):
    flag = random_flag(9, 7, gf, rng)
    q_line, p_line = line_forms(det3, 4, flag)
    assert (q_line.degree, p_line.degree) == (7, 3)
    assert p_line.leading == det3.to_field(gf).evaluate(list(flag.point))


def test_flag_dimension_must_match_k(det3, gf, rng):
    flag = random_flag(9, 5, gf, rng)
    with pytest.raises(InvalidInputError):
        eval_dual_equation(det3, 4, flag)


def test_determinant_equations_vanish(det3, gf, rng):
    for _ in range(4):
        flag = random_flag(9, 7, gf, rng)
        assert eval_dual_equation(det3, 4, flag) == 0
        assert full_remainder_check(det3, 4, flag)


def flags_off_the_hypersurface(poly, dim, field, rng, count):
    reduced = poly.to_field(field)
    while count:
        flag = random_flag(poly.nvars, dim, field, rng)
        if reduced.evaluate(list(flag.point)) != 0:
            count -= 1
            yield flag


@pytest.mark.slow
@pytest.mark.parametrize('name, k', [('det3', 4), ('det4', 6)])
def test_determinant_equations_vanish_everywhere(request, name, k):
    poly = request.getfixturevalue(name)
    for prime in (10007, 32003):
        field = PrimeField(prime)
        for flag in flags_off_the_hypersurface(poly, k + 3, field, Prng(prime), 50):
            assert eval_dual_equation(poly, k, flag) == 0


def test_determinant_membership(det3, det4):
    assert dual_membership(det3, 4).holds
    assert dual_membership(det4, 6, trials=4).holds


@pytest.mark.slow
def test_determinant_four_fails_below_its_dual_dimension(det4):
    verdict = dual_membership(det4, 5, trials=2)
    assert not verdict.holds
    assert verdict.witnesses


def test_membership_moves_past_unlucky_primes(det3):
    verdict = dual_membership(det3.scale(10007), 4, trials=2, primes=[10007])
    assert verdict.primes == [10009]
    assert verdict.holds


def test_permanent_fails_with_witnesses(perm3):
    verdict = dual_membership(perm3, 6)
    assert not verdict.holds
    assert verdict.witnesses
    witness = verdict.witnesses[0]
    assert not witness.remainder.is_zero()
    assert witness.prime in verdict.primes


def test_generic_cubic_fails():
    cubic = random_form(3, 9, Prng(0))
    verdict = dual_membership(cubic, 4, trials=2)
    assert not verdict.holds


def test_cones_pass():
    for seed in range(3):
        cone = random_form(3, 9, Prng(seed), active=4)
        assert dual_membership(cone, 2, trials=4).holds


def test_padded_and_boundary_polynomials_pass(perm2):
    assert dual_membership(padded_poly(perm2, 3).poly, 2).holds
    assert dual_membership(p_lambda(3).poly, 4, trials=4).holds


def test_non_reduced_polynomials_pass_for_their_reduced_dual(perm2_squared):
    assert dual_membership(perm2_squared, 0, trials=4).holds


def test_membership_is_reproducible(perm3):
    first = dual_membership(perm3, 6, trials=2, rng=Prng(8))
    second = dual_membership(perm3, 6, trials=2, rng=Prng(8))
    assert [w.flag for w in first.witnesses] == [w.flag for w in second.witnesses]
    assert first.seed == 8


def test_membership_preconditions(det3):
    with pytest.raises(InvalidInputError):
        dual_membership(det3, 7)
    with pytest.raises(InvalidInputError):
        dual_membership(det3, 4, trials=0)


def test_homogeneity(gf):
    rng = Prng(6)
    poly = random_form(3, 5, rng)
    for lam in (2, 3, 10006):
        flag = random_flag(5, 4, gf, rng)
        assert homogeneity_check(poly, 1, flag, lam)


@pytest.mark.parametrize('k', [1, 2, 4])
def test_weight_covariance(k, gf):
    rng = Prng(40 + k)
    for _ in range(7):
        poly = random_form(3, k + 4, rng)
        flag = random_flag(k + 4, k + 3, gf, rng)
        parameters = [gf.random_nonzero(rng) for _ in range(4)]
        assert weight_covariance_check(poly, k, flag, *parameters)


def test_weight_covariance_over_the_rationals():
    rng = Prng(11)
    poly = random_form(3, 5, rng)
    flag = random_flag(5, 4, QQ, rng)
    assert poly.evaluate(list(flag.point)) != 0
    assert eval_dual_equation(poly, 1, flag) != 0
    assert weight_covariance_check(poly, 1, flag, 2, 3, 5, 7)


def test_omega_weight_identity():
    for d in range(3, 9):
        for k in range(11):
            weight = omega_weight(k, d)
            assert weight.satisfies_total()
            assert weight.degree == (k + 2) * (d - 1)
            assert weight.index == k + 3


def test_weights_side_by_side():
    omega, stated = omega_weight(4, 3), stated_det_weight(3)
    assert (omega.a, omega.b, omega.c, omega.degree) == (12, 5, 2, 12)
    assert (stated.a, stated.b, stated.c, stated.degree) == (6, 5, 2, 6)
    with pytest.raises(InvalidInputError):
        omega_weight(0, 2)
    with pytest.raises(InvalidInputError):
        stated_det_weight(2)


def test_dc_bounds(perm2, perm3, det3):
    assert dc_bound_from_dual_dim(7) == 4
    assert dc_bound_from_dual_dim(2) == 2
    assert dc_lower_bound(perm3, trials=4) == 4
    assert dc_lower_bound(perm2, trials=4) == 2
    assert dc_lower_bound(det3, trials=4) == 3
