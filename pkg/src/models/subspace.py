"""
Subspace varieties: forms P in S^d U* for a subspace U* of W* of dimension k + 2, i.e.
cones over hypersurfaces in fewer variables.
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Optional

from src.arith.matrix import sparse_rank
from src.arith.prng import Prng
from src.arith.scalars import QQ, Field
from src.errors import InvalidInputError
from src.poly.multipoly import MultiPoly


def essential_vars(poly: MultiPoly) -> int:
    """Rank of the span of the first partials: the least number of variables P can be written in."""
    return sparse_rank([dict(partial.terms) for partial in poly.gradient()])


def subspace_membership(poly: MultiPoly, k: int) -> bool:
    return essential_vars(poly) <= k + 2


def monomials(nvars: int, degree: int, active: Optional[int] = None) -> list[tuple[int, ...]]:
    """Exponent vectors of the given degree supported on the first `active` variables."""
    active = nvars if active is None else active
    result = []
    for chosen in combinations_with_replacement(range(active), degree):
        exponents = [0] * nvars
        for i in chosen:
            exponents[i] += 1
        result.append(tuple(exponents))
    return result


def random_form(degree: int, nvars: int, rng: Prng, active: Optional[int] = None, field: Field = QQ) -> MultiPoly:
    """A form with every monomial in the first `active` variables and random coefficients."""
    return MultiPoly(nvars, {m: field.random_element(rng) for m in monomials(nvars, degree, active)}, field)


@dataclass(frozen=True)
class SubVarietyDims:
    k: int
    d: int
    nvars: int
    section_formula: int
    binomial_formula: int
    empirical: int

    @property
    def formulas_agree(self) -> bool:
        return self.section_formula == self.binomial_formula == self.empirical


def sub_variety_dims(k: int, d: int, nvars: int, seed: int = 0) -> SubVarietyDims:
    """
    The sub_variety_dims function returns two closed forms for dim Sub_{k+2} in P(S^d W*)
    next to an empirical tangent dimension.

    The empirical value is the rank of S^d U* + {(u _| P) alpha : u in U, alpha in W*} at a
    seeded generic P in S^d U*, minus one.

    :param k: int: dim U* = k + 2 <= N
    :param d: int: Degree
    :param nvars: int: N = dim W
    :param seed: int: Seed of the generic P
    :return: SubVarietyDims with k+1+(k+2)(N-k-2), binom(k+d+1, d)+(k+2)(N-k-2)-1 and the rank
    """
    active = k + 2
    if active > nvars or k < 0 or d < 1:
        raise InvalidInputError(f"Need 0 <= k, k + 2 <= N and d >= 1, got k = {k}, d = {d}, N = {nvars}")
    poly = random_form(d, nvars, Prng(seed), active)
    vectors = [{m: QQ.one} for m in monomials(nvars, d, active)]
    for i in range(active):
        partial = poly.partial_derivative(i)
        for j in range(nvars):
            vectors.append(dict((partial * MultiPoly.variable(j, nvars, QQ)).terms))
    free = (k + 2) * (nvars - k - 2)
    return SubVarietyDims(
        k=k,
        d=d,
        nvars=nvars,
        section_formula=k + 1 + free,
        binomial_formula=comb(k + d + 1, d) + free - 1,
        empirical=sparse_rank(vectors) - 1,
    )
