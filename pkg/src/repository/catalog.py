"""
Resolution of polynomial specs given on the command line:

    det:n | perm:m | padded:perm:m:d | plambda:n | immanant:p1,p2,...
    random:d:N:seed | cone:m:d:N:seed
    a file path (absolute, relative, or inside settings.catalog_dir)
    inline polynomial text
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from config_file import settings
from src.arith.prng import Prng
from src.errors import InvalidInputError, PolyParseError
from src.models.matrix_space import det_poly, immanant_poly, perm_poly
from src.models.padded import padded_poly
from src.models.pfaffian import p_lambda
from src.models.subspace import random_form
from src.poly.multipoly import MultiPoly
from src.poly.text import parse_poly
from src.rep.partitions import parse_partition

logger = logging.getLogger(__name__)

NAMED = ('det', 'perm', 'padded', 'plambda', 'immanant', 'random', 'cone')


@dataclass(frozen=True)
class CatalogEntry:
    spec: str
    poly: MultiPoly
    matrix_size: Optional[int] = None


def _integers(spec: str, fields: list[str], count: int) -> list[int]:
    if len(fields) != count:
        raise InvalidInputError(f"Catalog entry '{spec}' expects {count} integer fields")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise InvalidInputError(f"Catalog entry '{spec}' has a non-integer field")


def strip_comments(text: str) -> str:
    """Drop '#' comments; line breaks stay so parse errors keep their line numbers."""
    return '\n'.join(line.split('#', 1)[0] for line in text.splitlines())


def load_file(path: Path) -> MultiPoly:
    logger.debug("reading polynomial from %s", path)
    return parse_poly(strip_comments(path.read_text(encoding='utf-8')))


def _named(spec: str) -> CatalogEntry:
    kind, *fields = spec.split(':')
    if kind == 'det':
        n, = _integers(spec, fields, 1)
        return CatalogEntry(spec, det_poly(n).poly, n)
    if kind == 'perm':
        n, = _integers(spec, fields, 1)
        return CatalogEntry(spec, perm_poly(n).poly, n)
    if kind == 'plambda':
        n, = _integers(spec, fields, 1)
        return CatalogEntry(spec, p_lambda(n).poly, n)
    if kind == 'immanant':
        if len(fields) != 1:
            raise InvalidInputError(f"Catalog entry '{spec}' expects immanant:p1,p2,...")
        result = immanant_poly(parse_partition(fields[0]))
        return CatalogEntry(spec, result.poly, result.n)
    if kind == 'padded':
        if not fields or fields[0] != 'perm':
            raise InvalidInputError(f"Only padded permanents are catalogued, got '{spec}'")
        m, d = _integers(spec, fields[1:], 2)
        return CatalogEntry(spec, padded_poly(perm_poly(m).poly, d).poly)
    if kind == 'random':
        d, n, seed = _integers(spec, fields, 3)
        return CatalogEntry(spec, random_form(d, n, Prng(seed)))
    if kind == 'cone':
        m, d, n, seed = _integers(spec, fields, 4)
        if m > n:
            raise InvalidInputError(f"A cone in {m} of {n} variables is impossible")
        return CatalogEntry(spec, random_form(d, n, Prng(seed), active=m))
    raise InvalidInputError(f"Unknown catalog entry '{spec}'")


def resolve(spec: str) -> CatalogEntry:
    """
    The resolve function turns a --poly argument into a polynomial.

    :param spec: str: Catalog name, file path or polynomial text
    :return: CatalogEntry
    :raises InvalidInputError: Malformed catalog name
    :raises PolyParseError: The text is not a polynomial
    """
    spec = spec.strip()
    head = spec.split(':', 1)[0]
    if ':' in spec and head in NAMED:
        return _named(spec)
    for candidate in (Path(spec), settings.catalog_dir / spec):
        try:
            if candidate.is_file():
                return CatalogEntry(spec, load_file(candidate))
        except OSError:
            continue
    try:
        return CatalogEntry(spec, parse_poly(spec))
    except PolyParseError:
        logger.debug("'%s' is neither a catalog name, a file nor a polynomial", spec)
        raise
