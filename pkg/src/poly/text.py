"""
Polynomial text format shared by --poly and catalog files.

    poly        := [sign] term (sign term)*
    term        := coefficient ['*'] monomial | coefficient | monomial
    coefficient := integer | integer '/' integer
    monomial    := factor ('*' factor)*
    factor      := 'x' index ['^' integer]

Whitespace (newlines included) is ignored. Output is printed in graded lexicographic order.
"""
from fractions import Fraction
from typing import Optional

from src.arith.scalars import QQ, ModP
from src.errors import PolyParseError, UnknownVariableError
from src.poly.multipoly import MultiPoly


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos: Optional[int] = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count('\n', 0, pos) + 1
        column = pos - (self.text.rfind('\n', 0, pos) + 1) + 1
        return line, column

    def error(self, detail: str, pos: Optional[int] = None, cls=PolyParseError):
        line, column = self.location(pos)
        return cls(detail, line, column)

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected an integer")
        return int(self.text[start:self.pos])

    def identifier(self) -> tuple[str, int]:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == '_'):
            self.pos += 1
        return self.text[start:self.pos], start


def _parse_monomial(scanner: _Scanner, exponents: dict[int, int], nvars: Optional[int]):
    while True:
        name, start = scanner.identifier()
        if not name:
            raise scanner.error("Expected a variable")
        if name[0] != 'x' or not name[1:].isdigit():
            raise scanner.error(f"Unknown variable '{name}'", start, UnknownVariableError)
        index = int(name[1:])
        if nvars is not None and index >= nvars:
            raise scanner.error(f"Unknown variable '{name}' for {nvars} variables", start, UnknownVariableError)
        power = scanner.integer() if scanner.take('^') else 1
        exponents[index] = exponents.get(index, 0) + power
        if not scanner.take('*'):
            return


def parse_poly(text: str, nvars: Optional[int] = None) -> MultiPoly:
    """
    The parse_poly function reads a polynomial over QQ from its text form.

    :param text: str: Polynomial text, e.g. "x0^2*x1 - 3*x2^3"
    :param nvars: Optional[int]: Ambient variable count; inferred from the largest index when omitted
    :return: The parsed MultiPoly
    :raises PolyParseError: Malformed input, with line and column
    :raises UnknownVariableError: A name other than x<index>, or an index past nvars
    """
    scanner = _Scanner(text)
    raw_terms: list[tuple[Fraction, dict[int, int]]] = []
    if not scanner.peek():
        raise scanner.error("Empty polynomial")
    first = True
    while scanner.peek():
        sign = 1
        if scanner.take('-'):
            sign = -1
        elif scanner.take('+'):
            pass
        elif not first:
            raise scanner.error(f"Expected '+' or '-', found '{scanner.peek()}'")
        first = False

        coefficient = Fraction(sign)
        exponents: dict[int, int] = {}
        char = scanner.peek()
        if char.isdigit():
            numerator = scanner.integer()
            if scanner.take('/'):
                denominator = scanner.integer()
                if denominator == 0:
                    raise scanner.error("Zero denominator")
                coefficient *= Fraction(numerator, denominator)
            else:
                coefficient *= numerator
            if scanner.take('*'):
                if not scanner.peek().isalpha():
                    raise scanner.error("Expected a variable after '*'")
                _parse_monomial(scanner, exponents, nvars)
            elif scanner.peek().isalpha():
                _parse_monomial(scanner, exponents, nvars)
        elif char.isalpha():
            _parse_monomial(scanner, exponents, nvars)
        else:
            raise scanner.error(f"Unexpected character '{char}'" if char else "Unexpected end of input")
        raw_terms.append((coefficient, exponents))

    if nvars is None:
        nvars = 1 + max((i for _, exps in raw_terms for i in exps), default=-1)
        nvars = max(nvars, 1)
    poly = MultiPoly.zero(nvars, QQ)
    for coefficient, exponents in raw_terms:
        monomial = tuple(exponents.get(i, 0) for i in range(nvars))
        poly = poly + MultiPoly(nvars, {monomial: coefficient}, QQ)
    return poly


def _format_coefficient(value) -> str:
    if isinstance(value, ModP):
        return str(value.value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_poly(poly: MultiPoly) -> str:
    """
    The format_poly function prints a polynomial in the text format, terms in graded
    lexicographic order.

    :param poly: MultiPoly: Polynomial to print
    :return: Canonical text; "0" for the zero polynomial
    """
    if poly.is_zero():
        return '0'
    pieces = []
    for monomial, coefficient in poly.sorted_terms():
        negative = not isinstance(coefficient, ModP) and coefficient < 0
        magnitude = -coefficient if negative else coefficient
        factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(monomial) if e]
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = '*'.join(factors)
        else:
            body = '*'.join([_format_coefficient(magnitude)] + factors)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return ''.join(pieces)
