"""Arguments and helpers shared by the command routers."""
import argparse
import logging
from typing import Sequence

from config_file import settings
from src.arith.prng import Prng
from src.polarize.sampling import repeated_factor_suspected
from src.poly.multipoly import MultiPoly
from src.shemas.reports import RunConfig

logger = logging.getLogger(__name__)

# Substream label of the repeated-factor check; sampling streams are labelled by primes.
REPEATED_FACTOR_STREAM = 0


def add_run_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--trials', type=int, default=None,
                        help=f"samples per prime (default {settings.default_trials})")
    parser.add_argument('--prime', dest='primes', type=int, action='append', default=None,
                        help=f"sampling prime, repeatable (default {settings.default_primes})")
    parser.add_argument('--seed', type=int, default=None,
                        help=f"root seed (default {settings.default_seed})")
    add_output_arguments(parser)


def add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--json', action='store_true', help="print the JSON report")
    parser.add_argument('--output', default=None, help="also write the JSON report to this file")


def run_config(args: argparse.Namespace, command: str) -> RunConfig:
    """Echo of the invocation with the settings defaults filled in."""
    trials = getattr(args, 'trials', None)
    primes = getattr(args, 'primes', None)
    seed = getattr(args, 'seed', None)
    return RunConfig(
        command=command,
        poly=getattr(args, 'poly', None),
        k=getattr(args, 'k', None),
        n=getattr(args, 'n', None),
        d=getattr(args, 'd', None),
        nvars=getattr(args, 'nvars', None),
        check=getattr(args, 'check', None),
        trials=settings.default_trials if trials is None else trials,
        primes=list(settings.default_primes) if primes is None else primes,
        seed=settings.default_seed if seed is None else seed,
        output=getattr(args, 'output', None),
    )


def repeated_factor_warnings(poly: MultiPoly, prime: int, rng: Prng) -> list[str]:
    """A one-item list when P looks non-reduced."""
    if poly.homogeneous_degree is None or poly.homogeneous_degree < 2:
        return []
    if not repeated_factor_suspected(poly, prime, rng.split(REPEATED_FACTOR_STREAM)):
        return []
    message = "P appears to have a repeated factor; results do not describe an irreducible hypersurface"
    logger.warning(message)
    return [message]


def prime_warnings(requested: Sequence[int], used: Sequence[int]) -> list[str]:
    """One warning per requested prime that was replaced for being unlucky for P."""
    return [f"prime {asked} is unlucky for P; used {got} instead"
            for asked, got in zip(requested, used) if asked != got]
