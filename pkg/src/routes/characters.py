import argparse
import logging

from src.errors import InvalidInputError
from src.rep.characters import character, dimension
from src.rep.partitions import make_partition, parse_partition, partition_label, partitions_of
from src.rep.relations import class_function_space_dim, classify_partitions, named_relations_hold
from src.routes.options import add_output_arguments, run_config
from src.services.reporting import timed
from src.shemas.reports import FAIL, PASS, Report

logger = logging.getLogger(__name__)

COMMAND = 'characters'


def register(subparsers):
    parser = subparsers.add_parser(COMMAND, help="characters of S_n and the four-term relations")
    parser.add_argument('--n', type=int, default=None, help="size of the symmetric group")
    parser.add_argument('--lambda', dest='lam', default=None, help="irreducible character, e.g. 2,1")
    parser.add_argument('--class', dest='mu', default=None, help="cycle type of the class, e.g. 3 or 2,1")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument('--classify', action='store_true', help="partitions whose characters satisfy every relation")
    mode.add_argument('--cdim', action='store_true', help="dimension of the class functions satisfying them")
    add_output_arguments(parser)
    parser.set_defaults(handler=characters)


def _require_n(args: argparse.Namespace) -> int:
    if args.n is None:
        raise InvalidInputError("--n is required with --classify and --cdim")
    return args.n


def _expected(n: int) -> set:
    return {make_partition([1] * n), make_partition([2] + [1] * (n - 2))}


def _classify(n: int) -> tuple[bool, dict]:
    found = classify_partitions(n)
    expected = _expected(n)
    ordered = [lam for lam in partitions_of(n) if lam in found]
    if found != expected:
        logger.info("n = %d: admissible characters %s", n, [partition_label(lam) for lam in ordered])
    return found == expected, {
        'n': n,
        'partitions': [partition_label(lam) for lam in ordered],
        'expected': [partition_label(lam) for lam in partitions_of(n) if lam in expected],
    }


def _cdim(n: int) -> tuple[bool, dict]:
    dim = class_function_space_dim(n)
    named = named_relations_hold(n)
    return dim == 2 and named, {'n': n, 'class_function_space_dim': dim, 'named_relations_hold': named}


def _lookup(args: argparse.Namespace) -> tuple[bool, dict]:
    if args.lam is None and args.n is None:
        raise InvalidInputError("Give --lambda, --n, --classify or --cdim")
    lam = parse_partition(args.lam) if args.lam is not None else None
    size = sum(lam) if lam is not None else args.n
    if args.n is not None and args.n != size:
        raise InvalidInputError(f"--n {args.n} does not match |lambda| = {size}")
    if lam is not None and args.mu is not None:
        mu = parse_partition(args.mu)
        return True, {
            'lambda': partition_label(lam),
            'class': partition_label(mu),
            'character': character(lam, mu),
            'dimension': dimension(lam),
        }
    classes = partitions_of(size)
    rows = [lam] if lam is not None else classes
    table = {
        partition_label(row): {partition_label(mu): character(row, mu) for mu in classes}
        for row in rows
    }
    return True, {'n': size, 'classes': [partition_label(mu) for mu in classes], 'table': table}


def characters(args: argparse.Namespace) -> Report:
    """
    The characters function answers character queries and runs the four-term relation checks.

    :param args: argparse.Namespace: Parsed characters arguments
    :return: Report; --classify passes iff the admissible characters are 1^n and 21^(n-2),
             --cdim iff the solution space is two-dimensional and satisfies the named relations
    """
    config = run_config(args, COMMAND)
    holder = {}
    with timed(holder):
        if args.classify:
            passed, values = _classify(_require_n(args))
        elif args.cdim:
            passed, values = _cdim(_require_n(args))
        else:
            passed, values = _lookup(args)
    return Report(
        command=COMMAND,
        config=config,
        verdict=PASS if passed else FAIL,
        values=values,
        timing=holder['timing'],
    )
