from fractions import Fraction
from typing import Union

from sympy import isprime

from src.errors import FieldMismatchError, InvalidInputError


class ModP:
    """Residue class modulo a prime p, kept in [0, p)."""
    __slots__ = ('value', 'p')

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other) -> int:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError(f"Cannot combine residues mod {self.p} and mod {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        raise FieldMismatchError(f"Cannot combine a residue mod {self.p} with {type(other).__name__}")

    def __add__(self, other):
        return ModP(self.value + self._lift(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return ModP(self.value - self._lift(other), self.p)

    def __rsub__(self, other):
        return ModP(self._lift(other) - self.value, self.p)

    def __mul__(self, other):
        return ModP(self.value * self._lift(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def inverse(self) -> 'ModP':
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * ModP(self._lift(other), self.p).inverse()

    def __rtruediv__(self, other):
        return ModP(self._lift(other), self.p) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return ModP(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return False

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, ModP]


class Rationals:
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, ModP):
            raise FieldMismatchError(f"Residue mod {value.p} is not a rational number")
        return Fraction(value)

    def contains(self, value) -> bool:
        return isinstance(value, (int, Fraction))

    def random_element(self, rng, bound: int = 9) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def random_nonzero(self, rng, bound: int = 9) -> Fraction:
        value = rng.randint(1, bound)
        return Fraction(value if rng.randbelow(2) else -value)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash('QQ')

    def __repr__(self):
        return 'QQ'


class PrimeField:
    def __init__(self, p: int):
        if not isinstance(p, int) or not isprime(p):
            raise InvalidInputError(f"{p} is not a prime")
        self.p = p
        self.characteristic = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def coerce(self, value) -> ModP:
        if isinstance(value, ModP):
            if value.p != self.p:
                raise FieldMismatchError(f"Residue mod {value.p} is not an element of GF({self.p})")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InvalidInputError(f"{value} has no image mod {self.p}")
            return ModP(value.numerator, self.p) / value.denominator
        return ModP(int(value), self.p)

    def contains(self, value) -> bool:
        return isinstance(value, ModP) and value.p == self.p

    def random_element(self, rng, bound: int = 0) -> ModP:
        return ModP(rng.randbelow(self.p), self.p)

    def random_nonzero(self, rng, bound: int = 0) -> ModP:
        return ModP(1 + rng.randbelow(self.p - 1), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(('GF', self.p))

    def __repr__(self):
        return f"GF({self.p})"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


def field_of(values) -> Field:
    """
    The field_of function infers the common field of a collection of scalars.

    :param values: Iterable of ints, Fractions or ModP residues
    :return: QQ when no residue is present, else GF(p) for the single prime seen
    :raises FieldMismatchError: residues modulo different primes, or residues next to Fractions;
        plain ints go with either
    """
    prime = None
    rational = False
    for value in values:
        if isinstance(value, ModP):
            if prime is not None and prime != value.p:
                raise FieldMismatchError(f"Entries mix residues mod {prime} and mod {value.p}")
            prime = value.p
        elif isinstance(value, Fraction):
            rational = True
    if prime is None:
        return QQ
    if rational:
        raise FieldMismatchError(f"Entries mix residues mod {prime} and rational numbers")
    return PrimeField(prime)
