import argparse

from src.arith.prng import Prng
from src.dual.equations import dual_membership, equation_degree, q_degree
from src.errors import InvalidInputError
from src.poly.text import format_poly
from src.repository.catalog import resolve
from src.routes.options import add_run_arguments, prime_warnings, repeated_factor_warnings, run_config
from src.services.reporting import flag_witness, timed
from src.shemas.reports import FAIL, PASS, Report

COMMAND = 'check-eqn'


def register(subparsers):
    parser = subparsers.add_parser(COMMAND, help="evaluate the equations of Dual_{k,d,N} on P")
    parser.add_argument('--poly', required=True, help="catalog name, file or polynomial text")
    parser.add_argument('--k', type=int, required=True, help="dual dimension bound, k + 3 <= N")
    add_run_arguments(parser)
    parser.set_defaults(handler=check_eqn)


def check_eqn(args: argparse.Namespace) -> Report:
    """
    The check_eqn function tests P against the flag equations of Dual_{k,d,N}.

    :param args: argparse.Namespace: Parsed check-eqn arguments
    :return: Report; PASS iff P_L divides Q_L on every sampled flag, witnesses otherwise
    """
    config = run_config(args, COMMAND)
    entry = resolve(config.poly)
    d = entry.poly.homogeneous_degree
    if d is None or d < 3:
        raise InvalidInputError("The flag equations need a form of degree >= 3")
    rng = Prng(config.seed)
    holder = {}
    with timed(holder):
        verdict = dual_membership(entry.poly, config.k, config.trials, config.primes, rng)
        warnings = prime_warnings(config.primes, verdict.primes)
        warnings += repeated_factor_warnings(entry.poly, verdict.primes[0], rng)
    values = {
        'holds': verdict.holds,
        'k': config.k,
        'degree': d,
        'nvars': entry.poly.nvars,
        'equation_degree': equation_degree(config.k, d),
        'q_degree': q_degree(config.k, d),
        'flags_tested': verdict.trials * len(verdict.primes),
        'failures': len(verdict.witnesses),
        'resamples': verdict.resamples,
        'primes_used': verdict.primes,
    }
    return Report(
        command=COMMAND,
        config=config,
        verdict=PASS if verdict.holds else FAIL,
        values=values,
        polynomial=format_poly(entry.poly),
        witnesses=[flag_witness(failure) for failure in verdict.witnesses],
        warnings=warnings,
        timing=holder['timing'],
    )
