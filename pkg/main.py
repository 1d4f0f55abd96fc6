import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from config_file import ExitCode, VERSION, settings
from src.errors import DualCheckError
from src.routes import characters, check_eqn, dual_dim, gct
from src.services.reporting import emit

logger = logging.getLogger(__name__)

ROUTERS = (dual_dim, check_eqn, characters, gct)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='dualcheck',
                                     description="Dual varieties, their equations and the GCT checks built on them")
    parser.add_argument('--version', action='version', version=f"%(prog)s {VERSION}")
    parser.add_argument('-v', '--verbose', action='count', default=0, help="-v for INFO, -vv for DEBUG")
    subparsers = parser.add_subparsers(dest='command', required=True)
    for router in ROUTERS:
        router.register(subparsers)
    return parser


def configure_logging(verbose: int):
    level = {0: settings.log_level, 1: 'INFO'}.get(verbose, 'DEBUG')
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    The main function parses the command line, runs one command and maps its outcome to
    the exit code: 0 for PASS, 1 for FAIL, the error's own code otherwise.

    :param argv: Optional[Sequence[str]]: Arguments without the program name
    :return: The exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        report = args.handler(args)
    except DualCheckError as error:
        print(f"error: {error.detail}", file=sys.stderr)
        return error.exit_code
    except ValidationError as error:
        print(f"error: {error}", file=sys.stderr)
        return ExitCode.invalid_input
    emit(report, args.json, report.config.output)
    return ExitCode.passed if report.passed else ExitCode.failed


if __name__ == '__main__':
    sys.exit(main())
