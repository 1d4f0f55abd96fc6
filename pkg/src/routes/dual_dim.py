import argparse
import logging

from src.arith.prng import Prng
from src.polarize.katz import hessian_rank_samples
from src.poly.text import format_poly
from src.repository.catalog import resolve
from src.routes.options import add_run_arguments, prime_warnings, repeated_factor_warnings, run_config
from src.services.reporting import timed
from src.shemas.reports import FAIL, PASS, Report

logger = logging.getLogger(__name__)

COMMAND = 'dual-dim'


def register(subparsers):
    parser = subparsers.add_parser(COMMAND, help="dimension of the dual variety by Katz sampling")
    parser.add_argument('--poly', required=True, help="catalog name, file or polynomial text")
    add_run_arguments(parser)
    parser.set_defaults(handler=dual_dim)


def dual_dim(args: argparse.Namespace) -> Report:
    """
    The dual_dim function estimates dim Z(P)* as the generic rank of the Hessian on Z(P),
    minus two, at every requested prime.

    :param args: argparse.Namespace: Parsed dual-dim arguments
    :return: Report; PASS when every prime gives the same dimension
    """
    config = run_config(args, COMMAND)
    entry = resolve(config.poly)
    rng = Prng(config.seed)
    holder = {}
    with timed(holder):
        samples = [hessian_rank_samples(entry.poly, config.trials, prime, rng) for prime in config.primes]
        used = [sample.prime for sample in samples]
        warnings = prime_warnings(config.primes, used) + repeated_factor_warnings(entry.poly, used[0], rng)
    dims = {str(sample.prime): sample.generic_rank - 2 for sample in samples}
    agreed = len(set(dims.values())) == 1
    if not agreed:
        logger.info("Katz dimensions disagree across primes: %s", dims)
    values = {
        'dual_dim': samples[0].generic_rank - 2 if agreed else None,
        'dual_dim_by_prime': dims,
        'rank_histogram': {str(s.prime): {str(r): c for r, c in s.histogram.items()} for s in samples},
        'nvars': entry.poly.nvars,
        'degree': entry.poly.homogeneous_degree,
        'primes_used': used,
    }
    return Report(
        command=COMMAND,
        config=config,
        verdict=PASS if agreed else FAIL,
        values=values,
        polynomial=format_poly(entry.poly),
        warnings=warnings,
        timing=holder['timing'],
    )
