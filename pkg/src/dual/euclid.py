"""
Euclidean division of binary forms in the x-direction:

    Q = P D + y^(e-d+1) R,    deg D = e - d,  deg R = d - 1,

obtained by dehomogenizing at y = 1 and dividing in x. It needs p_d, the coefficient of
x^d in P, to be nonzero.
"""
from dataclasses import dataclass

from src.arith.scalars import Scalar
from src.errors import FieldMismatchError, InvalidInputError, LineAtInfinityError
from src.poly.binary import BinaryForm


@dataclass(frozen=True)
class DivisionResult:
    quotient: BinaryForm
    remainder: BinaryForm

    @property
    def top_remainder(self) -> Scalar:
        """R_{d-1}, the x^(d-1) coefficient of the remainder."""
        return self.remainder.coeffs[-1]


def _check_pair(q: BinaryForm, p: BinaryForm) -> tuple[int, int]:
    if q.field != p.field:
        raise FieldMismatchError(f"Fields differ: {q.field!r} and {p.field!r}")
    e, d = q.degree, p.degree
    if not e >= d >= 1:
        raise InvalidInputError(f"Division needs e >= d >= 1, got e = {e}, d = {d}")
    if p.leading == 0:
        raise LineAtInfinityError("Leading coefficient p_d vanishes: D lies on Z(P_L), change coordinates on L")
    return e, d


def binary_euclid(q: BinaryForm, p: BinaryForm) -> DivisionResult:
    """
    The binary_euclid function divides Q by P as binary forms.

    :param q: BinaryForm: Q of degree e
    :param p: BinaryForm: P of degree d <= e with p_d != 0
    :return: DivisionResult (D, R) with Q = P D + y^(e-d+1) R
    :raises LineAtInfinityError: p_d = 0
    """
    e, d = _check_pair(q, p)
    field = q.field
    remainder = list(q.coeffs)
    quotient = [field.zero] * (e - d + 1)
    inv = 1 / p.leading
    for shift in range(e - d, -1, -1):
        factor = remainder[shift + d] * inv
        quotient[shift] = factor
        if factor == 0:
            continue
        for i, c in enumerate(p.coeffs):
            remainder[shift + i] = remainder[shift + i] - factor * c
    return DivisionResult(BinaryForm(quotient, field), BinaryForm(remainder[:d], field))


def rhat(q: BinaryForm, p: BinaryForm) -> Scalar:
    """
    The rhat function returns p_d^(e-d+2) [y^(e-d+1)] Q(1, y) / P(1, y).

    Computed without division by the recursion
    c_m = b_0^m a_m - sum_{j=1..m} b_j b_0^(j-1) c_(m-j), where a_m = q_(e-m) and b_m = p_(d-m)
    are the ascending y-coefficients of Q(1, y) and P(1, y). It vanishes exactly when the
    top remainder coefficient R_{d-1} does.

    :param q: BinaryForm: Q of degree e
    :param p: BinaryForm: P of degree d <= e with p_d != 0
    :return: The scalar R-hat(Q, P)
    :raises LineAtInfinityError: p_d = 0
    """
    e, d = _check_pair(q, p)
    a = q.series_coefficients()
    b = p.series_coefficients()
    zero = q.field.zero
    target = e - d + 1
    b0 = b[0]
    b0_powers = [q.field.one]
    for _ in range(target):
        b0_powers.append(b0_powers[-1] * b0)
    scaled: list[Scalar] = []
    for m in range(target + 1):
        value = b0_powers[m] * a[m] if m <= e else zero
        for j in range(1, min(m, d) + 1):
            if b[j] != 0:
                value = value - b[j] * b0_powers[j - 1] * scaled[m - j]
        scaled.append(value)
    return scaled[target]


def series_coefficient(q: BinaryForm, p: BinaryForm, index: int) -> Scalar:
    """[y^index] Q(1, y) / P(1, y) by truncated power-series division over the field."""
    if p.leading == 0:
        raise LineAtInfinityError("P(1, 0) = p_d vanishes; the series does not exist")
    a = q.series_coefficients()
    b = p.series_coefficients()
    zero = q.field.zero
    series: list[Scalar] = []
    for m in range(index + 1):
        value = a[m] if m < len(a) else zero
        for j in range(1, min(m, len(b) - 1) + 1):
            value = value - b[j] * series[m - j]
        series.append(value / b[0])
    return series[index]


def rhat_scaling_check(q: BinaryForm, p: BinaryForm, alpha, beta, lam) -> bool:
    """
    True iff rhat(alpha Q(x, lam y), beta P(x, lam y))
    = alpha beta^(e-d+1) lam^(e-d+1) rhat(Q, P).
    """
    field = q.field
    alpha, beta, lam = field.coerce(alpha), field.coerce(beta), field.coerce(lam)
    exponent = q.degree - p.degree + 1
    left = rhat(q.scale_y(lam).scale(alpha), p.scale_y(lam).scale(beta))
    right = alpha * beta ** exponent * lam ** exponent * rhat(q, p)
    return left == right
