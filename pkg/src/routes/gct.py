"""The gct command: one check per --check value, each with its own expected value."""
import argparse
import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from src.arith.matrix import kernel_basis
from src.arith.prng import Prng
from src.arith.scalars import QQ
from src.dual.equations import dc_bound_from_dual_dim
from src.dual.weights import omega_weight, stated_det_weight
from src.errors import InvalidInputError
from src.models.determinant import (
    det_hessian_form,
    det_hessian_kernel,
    kernel_conditions,
    random_corank_one,
    random_orbit_tangent,
    satisfies_kernel_conditions,
    tangent_condition_check,
    tangent_ratio,
)
from src.models.matrix_space import unflatten
from src.models.padded import padded_dual_check
from src.models.pfaffian import curve_limit_check, p_lambda
from src.models.stabilizer import stabilizer_dim
from src.models.subspace import essential_vars, sub_variety_dims
from src.polarize.katz import hessian_rank_samples
from src.poly.text import format_poly
from src.repository.catalog import CatalogEntry, resolve
from src.routes.options import add_run_arguments, prime_warnings, run_config
from src.services.reporting import point_witness, timed, to_int
from src.shemas.reports import FAIL, PASS, Report, RunConfig

logger = logging.getLogger(__name__)

COMMAND = 'gct'

# Substream labels; sampling streams below them are labelled by primes and trials.
FIRST_TANGENT, SECOND_TANGENT, RATIO_STREAM = 1, 2, 3


@dataclass
class Outcome:
    passed: bool
    values: dict
    polynomial: Optional[str] = None
    witnesses: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def _catalog_size(entry: CatalogEntry, kind: str) -> Optional[int]:
    """n when the polynomial was given as the catalog name kind:n."""
    head, _, tail = entry.spec.partition(':')
    return int(tail) if head == kind and tail.isdigit() else None


def _require_poly(config: RunConfig) -> CatalogEntry:
    if config.poly is None:
        raise InvalidInputError(f"--check {config.check} needs --poly")
    return resolve(config.poly)


def _size(config: RunConfig, default: int = 3) -> int:
    return default if config.n is None else config.n


def _katz_by_prime(poly, config: RunConfig, rng: Prng) -> tuple[dict[str, int], list[str]]:
    """Katz dimensions keyed by the prime actually used, and a warning per replaced prime."""
    samples = [hessian_rank_samples(poly, config.trials, prime, rng) for prime in config.primes]
    dims = {str(sample.prime): sample.generic_rank - 2 for sample in samples}
    return dims, prime_warnings(config.primes, [sample.prime for sample in samples])


def curve(config: RunConfig, rng: Prng) -> Outcome:
    n = _size(config)
    result = curve_limit_check(n)
    scalar = None if result.scalar is None else str(result.scalar)
    passed = result.passed and result.scalar == n
    return Outcome(passed, {'n': n, 'constant_vanishes': result.constant_vanishes, 'scalar': scalar,
                            'expected_scalar': n})


def stabilizer(config: RunConfig, rng: Prng) -> Outcome:
    entry = _require_poly(config)
    dim = stabilizer_dim(entry.poly)
    expected = None
    if (n := _catalog_size(entry, 'det')) is not None:
        expected = 2 * n * n - 1
    elif (n := _catalog_size(entry, 'plambda')) is not None:
        expected = 2 * n * n
    passed = expected is None or dim == expected
    return Outcome(passed, {'stabilizer_dim': dim, 'expected': expected}, format_poly(entry.poly))


def kernel(config: RunConfig, rng: Prng) -> Outcome:
    """Rank, kernel size and kernel description of H_det at rank n - 1 points over QQ."""
    n = _size(config)
    expected_dim = (n - 1) ** 2 - 1
    ranks, failures = [], []
    for trial in range(config.trials):
        w = random_corank_one(n, QQ, rng.split(trial))
        form = det_hessian_form(w)
        found = det_hessian_kernel(w)
        described = kernel_basis(kernel_conditions(w))
        inside = all(satisfies_kernel_conditions(w, unflatten(x, QQ)) for x in found.columns())
        contained = all(all(v == 0 for v in form.apply(x)) for x in described.columns())
        rank = form.rank()
        ranks.append(rank)
        if rank != 2 * n or found.ncols != expected_dim or described.ncols != expected_dim or not (inside and contained):
            failures.append(trial)
            logger.info("seed %d, trial %d: kernel of H_det,w does not match its description", rng.seed, trial)
    return Outcome(not failures, {'n': n, 'ranks': ranks, 'expected_rank': 2 * n,
                                  'expected_kernel_dim': expected_dim, 'failed_trials': failures})


def tangent(config: RunConfig, rng: Prng) -> Outcome:
    prime = config.primes[0]
    values = {}
    if config.poly is not None:
        entry = resolve(config.poly)
        direction, ratio = entry.poly, None
    else:
        n = _size(config)
        direction = random_orbit_tangent(n, rng.split(FIRST_TANGENT))
        other = random_orbit_tangent(n, rng.split(SECOND_TANGENT))
        ratio = tangent_ratio(direction, other, n, rng.split(RATIO_STREAM), prime)
        values['ratios'] = [to_int(ratio.first), to_int(ratio.second)]
    verdict = tangent_condition_check(direction, config.trials, prime, rng)
    values['passed_trials'] = verdict.trials - len(verdict.witnesses)
    passed = verdict.passed and (ratio is None or ratio.agree)
    values['prime_used'] = verdict.prime
    return Outcome(passed, values, format_poly(direction), [point_witness(f) for f in verdict.witnesses],
                   prime_warnings([prime], [verdict.prime]))


def dcbound(config: RunConfig, rng: Prng) -> Outcome:
    entry = _require_poly(config)
    dims, warnings = _katz_by_prime(entry.poly, config, rng)
    agreed = len(set(dims.values())) == 1
    bound = dc_bound_from_dual_dim(max(dims.values()))
    expected = None
    if (m := _catalog_size(entry, 'perm')) is not None:
        expected = -(-(m * m - 1) // 2)
    elif (n := _catalog_size(entry, 'det')) is not None:
        expected = n
    passed = agreed and (expected is None or bound == expected)
    return Outcome(passed, {'bound': bound, 'dual_dim_by_prime': dims, 'expected': expected},
                   format_poly(entry.poly), warnings=warnings)


def concise(config: RunConfig, rng: Prng) -> Outcome:
    n = _size(config)
    count = essential_vars(p_lambda(n).poly)
    return Outcome(count == n * n, {'n': n, 'essential_vars': count, 'expected': n * n})


def katz_lambda(config: RunConfig, rng: Prng) -> Outcome:
    n = _size(config)
    poly = p_lambda(n).poly
    dims, warnings = _katz_by_prime(poly, config, rng)
    expected = 2 * n - 2
    passed = all(dim == expected for dim in dims.values())
    return Outcome(passed, {'n': n, 'dual_dim_by_prime': dims, 'expected': expected}, format_poly(poly),
                   warnings=warnings)


def dual_weight(config: RunConfig, rng: Prng) -> Outcome:
    n = _size(config)
    omega, stated = omega_weight(2 * n - 2, n), stated_det_weight(n)
    values = {
        'n': n,
        'omega': {'a': omega.a, 'b': omega.b, 'c': omega.c, 'index': omega.index, 'degree': omega.degree},
        'stated': {'a': stated.a, 'b': stated.b, 'c': stated.c, 'index': stated.index, 'degree': stated.degree},
        'omega_total': omega.total(),
        'stated_total': stated.total(),
    }
    warnings = []
    if (omega.a, omega.b, omega.degree) != (stated.a, stated.b, stated.degree):
        warnings.append("the quoted determinant weight differs from omega(2n-2, n)")
    return Outcome(omega.satisfies_total(), values, warnings=warnings)


def padded(config: RunConfig, rng: Prng) -> Outcome:
    entry = _require_poly(config)
    if config.d is None:
        raise InvalidInputError("--check padded needs --d")
    result = padded_dual_check(entry.poly, config.d, config.nvars, config.trials, config.primes, rng)
    values = {'base_dims': result.base_dims, 'padded_dims': result.padded_dims, 'blocks': None}
    if result.blocks is not None:
        values['blocks'] = {'corner': result.blocks.corner, 'base_block': result.blocks.base_block,
                            'extra_block': result.blocks.extra_block, 'cross_block': result.blocks.cross_block}
    return Outcome(result.holds(), values, format_poly(entry.poly))


def subvariety(config: RunConfig, rng: Prng) -> Outcome:
    if config.k is None or config.d is None or config.nvars is None:
        raise InvalidInputError("--check subvariety needs --k, --d and --nvars")
    dims = sub_variety_dims(config.k, config.d, config.nvars, config.seed)
    values = {'section_formula': dims.section_formula, 'binomial_formula': dims.binomial_formula,
              'empirical': dims.empirical}
    # section_formula is reported for comparison only
    return Outcome(dims.binomial_formula == dims.empirical, values)


CHECKS: dict[str, Callable[[RunConfig, Prng], Outcome]] = {
    'curve': curve,
    'stabilizer': stabilizer,
    'kernel': kernel,
    'tangent': tangent,
    'dcbound': dcbound,
    'concise': concise,
    'katz-lambda': katz_lambda,
    'dual-weight': dual_weight,
    'padded': padded,
    'subvariety': subvariety,
}


def register(subparsers):
    parser = subparsers.add_parser(COMMAND, help="checks of the determinant, permanent and boundary claims")
    parser.add_argument('--check', required=True, choices=sorted(CHECKS))
    parser.add_argument('--poly', default=None, help="catalog name, file or polynomial text")
    parser.add_argument('--n', type=int, default=None, help="matrix size (default 3)")
    parser.add_argument('--k', type=int, default=None)
    parser.add_argument('--d', type=int, default=None, help="target degree or form degree")
    parser.add_argument('--nvars', type=int, default=None, help="number of ambient variables")
    add_run_arguments(parser)
    parser.set_defaults(handler=gct)


def gct(args: argparse.Namespace) -> Report:
    """
    The gct function runs one named check and reports it against its expected value.

    :param args: argparse.Namespace: Parsed gct arguments
    :return: Report; PASS iff the expected value is met
    """
    config = run_config(args, COMMAND)
    rng = Prng(config.seed)
    holder = {}
    with timed(holder):
        outcome = CHECKS[config.check](config, rng)
    return Report(
        command=COMMAND,
        config=config,
        verdict=PASS if outcome.passed else FAIL,
        values=outcome.values,
        polynomial=outcome.polynomial,
        witnesses=outcome.witnesses,
        warnings=outcome.warnings,
        timing=holder['timing'],
    )
