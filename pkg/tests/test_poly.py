from fractions import Fraction

import pytest
from sympy import discriminant, symbols

from src.arith.prng import Prng
from src.arith.scalars import QQ, PrimeField
from src.errors import FieldMismatchError, InvalidInputError, PolyParseError, UnknownVariableError
from src.models.matrix_space import det_poly, perm_poly, variable_matrix
from src.models.subspace import random_form
from src.poly.binary import BinaryForm, interpolate
from src.poly.multipoly import LinearSubstitution, MultiPoly, poly_sum, symbolic_det
from src.poly.text import format_poly, parse_poly


def test_parse_reads_terms():
    poly = parse_poly("x0^2*x1 - 3*x2^3")
    assert poly.nvars == 3
    assert poly.coefficient((2, 1, 0)) == 1
    assert poly.coefficient((0, 0, 3)) == -3
    assert poly.homogeneous_degree == 3


def test_parse_fractions_and_constants():
    poly = parse_poly("1/2*x0 + x1 - 5/3")
    assert poly.coefficient((1, 0)) == Fraction(1, 2)
    assert poly.coefficient((0, 0)) == Fraction(-5, 3)
    assert poly.homogeneous_degree is None


def test_parse_collects_like_terms():
    assert parse_poly("x0*x1 + x1*x0").coefficient((1, 1)) == 2
    assert parse_poly("x0 - x0 + x1").terms == {(0, 1): 1}


def test_parse_respects_declared_nvars():
    assert parse_poly("x0 + x1", nvars=4).nvars == 4
    with pytest.raises(UnknownVariableError):
        parse_poly("x5", nvars=3)


def test_parse_error_reports_location():
    with pytest.raises(PolyParseError) as error:
        parse_poly("x0 +\n  * x1")
    assert (error.value.line, error.value.column) == (2, 3)


@pytest.mark.parametrize('text, location', [("3*", (1, 3)), ("3* + x0", (1, 4)), ("x0 + 2*", (1, 8))])
def test_parse_rejects_a_dangling_star(text, location):
    with pytest.raises(PolyParseError) as error:
        parse_poly(text)
    assert (error.value.line, error.value.column) == location


def test_parse_rejects_unknown_names_and_empty_text():
    with pytest.raises(UnknownVariableError):
        parse_poly("y1 + x0")
    with pytest.raises(PolyParseError):
        parse_poly("   ")
    with pytest.raises(PolyParseError):
        parse_poly("x0 x1")
    with pytest.raises(PolyParseError):
        parse_poly("1/0*x0")


def test_format_is_canonical():
    assert format_poly(parse_poly("x1 - 2*x0^2 + 1/2")) == "-2*x0^2 + x1 + 1/2"
    assert format_poly(MultiPoly.zero(2)) == "0"
    det3 = det_poly(3).poly
    assert parse_poly(format_poly(det3), nvars=9) == det3


def test_format_prints_residues():
    poly = parse_poly("x0 - x1").to_field(PrimeField(7))
    assert format_poly(poly) == "x0 + 6*x1"


def test_arithmetic():
    x0, x1 = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
    assert (x0 + x1) ** 2 == parse_poly("x0^2 + 2*x0*x1 + x1^2")
    assert (x0 + x1) * (x0 - x1) == parse_poly("x0^2 - x1^2")
    assert (x0 - x0).is_zero()
    assert x0 * 3 == x0.scale(3)
    with pytest.raises(InvalidInputError):
        x0 ** -1


def test_determinant_times_permanent():
    product = det_poly(2).poly * perm_poly(2).poly
    assert product == parse_poly("x0^2*x3^2 - x1^2*x2^2")
    assert len(product.terms) == 2
    assert product.homogeneous_degree == 4


def test_fields_do_not_mix():
    x = MultiPoly.variable(0, 1)
    with pytest.raises(FieldMismatchError):
        x + x.to_field(PrimeField(5))


def test_partial_derivative_and_evaluate():
    poly = parse_poly("x0^3*x1 + 2*x1^2")
    assert poly.partial_derivative(0) == parse_poly("3*x0^2*x1", nvars=2)
    assert poly.partial_derivative(1) == parse_poly("x0^3 + 4*x1")
    assert poly.evaluate([2, 3]) == 8 * 3 + 2 * 9
    assert poly.to_field(PrimeField(5)).evaluate([2, 3]) == (8 * 3 + 18) % 5


def test_euler_identity_on_the_permanent():
    perm3 = perm_poly(3).poly
    euler = poly_sum((MultiPoly.variable(i, 9) * perm3.partial_derivative(i) for i in range(9)), 9)
    assert euler == perm3.scale(3)


def test_substitute_matches_pointwise_composition():
    rng = Prng(21)
    poly = random_form(3, 3, rng)
    substitution = LinearSubstitution.from_columns([[1, 2, 0], [0, 1, -1]], QQ)
    pulled = poly.substitute(substitution)
    assert pulled.nvars == 2
    for point in ([1, 2], [-3, 5], [0, 7]):
        assert pulled.evaluate(point) == poly.evaluate(substitution.apply(point))


def random_columns(rng, count, length, field=QQ):
    return [[field.random_element(rng) for _ in range(length)] for _ in range(count)]


@pytest.mark.parametrize('field', [QQ, PrimeField(10007)])
def test_substitutions_compose(field):
    rng = Prng(22)
    poly = random_form(3, 5, rng, field=field)
    first = LinearSubstitution.from_columns(random_columns(rng, 4, 5, field), field)
    second = LinearSubstitution.from_columns(random_columns(rng, 3, 4, field), field)
    assert poly.substitute(first).substitute(second) == poly.substitute(first.compose(second))
    pulled = poly.substitute(first)
    for _ in range(5):
        point = [field.random_element(rng) for _ in range(4)]
        assert pulled.evaluate(point) == poly.evaluate(first.apply(point))


def test_determinant_on_a_plane_is_a_squarefree_cubic():
    rng = Prng(23)
    det3 = det_poly(3).poly
    binary = det3.substitute(LinearSubstitution.from_columns(random_columns(rng, 2, 9), QQ))
    assert binary.homogeneous_degree == 3
    assert binary.coefficient((3, 0)) != 0
    t = symbols('t')
    dehomogenized = sum(c * t ** x_power for (x_power, _), c in binary.terms.items())
    assert discriminant(dehomogenized, t) != 0


def test_embed_shifts_variables():
    poly = parse_poly("x0*x1")
    assert poly.embed(4, offset=2) == parse_poly("x2*x3")
    with pytest.raises(InvalidInputError):
        poly.embed(2, offset=1)


def test_symbolic_det_is_the_determinant():
    assert symbolic_det(variable_matrix(3)) == det_poly(3).poly
    assert symbolic_det(variable_matrix(2)) == parse_poly("x0*x3 - x1*x2")


def test_interpolate():
    assert interpolate([0, 1, 2], [1, 6, 17], QQ) == [1, 2, 3]
    field = PrimeField(7)
    values = [field.coerce(2 + 5 * t * t) for t in range(3)]
    assert interpolate(range(3), values, field) == [2, 0, 5]


def test_binary_form_from_line_values():
    form = BinaryForm([1, 2, 3], QQ)
    assert form.evaluate(1, 4) == 16 + 8 + 3
    assert BinaryForm.from_line_values(2, lambda t: t * t + 2 * t + 3, QQ) == form
    assert form.leading == 3
    assert BinaryForm.from_multipoly(form.to_multipoly(), 2) == form


def test_binary_form_operations():
    form = BinaryForm([1, 1], QQ)
    assert (form * form).coeffs == (1, 2, 1)
    assert form.times_y_power(2).coeffs == (1, 1, 0, 0)
    assert form.scale_y(2).coeffs == (2, 1)
    assert form.series_coefficients() == [1, 1]
