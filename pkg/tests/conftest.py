import pytest

from src.arith.prng import Prng
from src.arith.scalars import QQ, PrimeField
from src.models.matrix_space import det_poly, perm_poly
from src.poly.text import parse_poly


@pytest.fixture
def qq():
    return QQ


@pytest.fixture
def gf():
    return PrimeField(10007)


@pytest.fixture
def rng():
    return Prng(0)


@pytest.fixture(scope='session')
def det3():
    return det_poly(3).poly


@pytest.fixture(scope='session')
def det4():
    return det_poly(4).poly


@pytest.fixture(scope='session')
def perm2():
    return perm_poly(2).poly


@pytest.fixture(scope='session')
def perm3():
    return perm_poly(3).poly


@pytest.fixture(scope='session')
def conic():
    return parse_poly("x0^2 + x1^2 + x2^2")


@pytest.fixture(scope='session')
def perm2_squared():
    return parse_poly("x0^2*x3^2 + 2*x0*x1*x2*x3 + x1^2*x2^2")
