from dataclasses import dataclass

from src.errors import InvalidInputError


@dataclass(frozen=True)
class WeightVector:
    """Highest weight a w_1 + b w_2 + c w_(k+3) and the degree of the equations it labels."""
    a: int
    b: int
    c: int
    k: int
    d: int
    degree: int

    @property
    def index(self) -> int:
        """Index of the fundamental weight carrying c."""
        return self.k + 3

    def total(self) -> int:
        return self.a + 2 * self.b + (self.k + 3) * self.c

    def satisfies_total(self) -> bool:
        return self.total() == self.d * (self.d - 1) * (self.k + 2)


def omega_weight(k: int, d: int) -> WeightVector:
    """
    The omega_weight function returns the weight of the equations of Dual_{k,d,N} and
    their degree (k + 2)(d - 1).

    :param k: int: Bound on the dual dimension, k >= 0
    :param d: int: Degree of the hypersurfaces, d >= 3
    :return: WeightVector with a = (d-1)(d-2)(k+2), b = d(k+2) - 2k - 5, c = 2
    """
    if d < 3 or k < 0:
        raise InvalidInputError(f"Weights are defined for d >= 3 and k >= 0, got k = {k}, d = {d}")
    return WeightVector(
        a=(d - 1) * (d - 2) * (k + 2),
        b=d * (k + 2) - 2 * k - 5,
        c=2,
        k=k,
        d=d,
        degree=(k + 2) * (d - 1),
    )


def stated_det_weight(n: int) -> WeightVector:
    """
    Weight and degree quoted for the determinant case k = 2n - 2, d = n:
    n(n-1)(n-2) w_1 + (2n^2 - 4n - 1) w_2 + 2 w_(2n+1) in degree n(n-1). Reported next to
    omega_weight(2n - 2, n), which differs by a factor 2 in a and in the degree.
    """
    if n < 3:
        raise InvalidInputError(f"The determinant weight is quoted for n >= 3, got {n}")
    return WeightVector(
        a=n * (n - 1) * (n - 2),
        b=2 * n * n - 4 * n - 1,
        c=2,
        k=2 * n - 2,
        d=n,
        degree=n * (n - 1),
    )
