import json
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

from src.arith.scalars import ModP
from src.shemas.reports import FlagWitness, PointWitness, Report

logger = logging.getLogger(__name__)


@contextmanager
def timed(report_holder: dict) -> Iterator[None]:
    """Store the elapsed wall time of the block under report_holder['timing']."""
    start = time.perf_counter()
    try:
        yield
    finally:
        report_holder['timing'] = round(time.perf_counter() - start, 3)


def to_int(value) -> int:
    if isinstance(value, ModP):
        return value.value
    return int(value)


def flag_witness(failure) -> FlagWitness:
    return FlagWitness(
        prime=failure.prime,
        trial=failure.trial,
        columns=[[to_int(v) for v in column] for column in failure.flag.columns],
        remainder=[to_int(c) for c in failure.remainder.coeffs],
    )


def point_witness(failure) -> PointWitness:
    return PointWitness(
        prime=failure.prime,
        trial=failure.trial,
        point=[to_int(v) for v in failure.point],
        direction=[to_int(v) for v in failure.direction],
        value=to_int(failure.value),
    )


def render_table(report: Report) -> str:
    """Human-readable summary: verdict, values, witnesses and warnings, one item per line."""
    lines = [f"{report.command}: {report.verdict}"]
    if report.polynomial is not None:
        shown = report.polynomial if len(report.polynomial) <= 120 else report.polynomial[:117] + '...'
        lines.append(f"  polynomial  {shown}")
    for key in sorted(report.values):
        lines.append(f"  {key:<22} {json.dumps(report.values[key], sort_keys=True)}")
    for witness in report.witnesses:
        lines.append(f"  witness     prime {witness.prime}, trial {witness.trial}")
    for warning in report.warnings:
        lines.append(f"  warning     {warning}")
    lines.append(f"  seed {report.config.seed}, primes {report.config.primes}, version {report.version}")
    if report.timing is not None:
        lines.append(f"  time        {report.timing:.3f} s")
    return '\n'.join(lines)


def emit(report: Report, as_json: bool, output: Optional[str] = None) -> str:
    """
    The emit function renders a report and writes it to stdout or to a file.

    :param report: Report: Finished report
    :param as_json: bool: JSON with sorted keys instead of the table
    :param output: Optional[str]: File path; the JSON form is always written there
    :return: The rendered text
    """
    text = report.json(sort_keys=True, indent=2) if as_json else render_table(report)
    if output:
        Path(output).write_text(report.json(sort_keys=True, indent=2) + '\n', encoding='utf-8')
        logger.info("report written to %s", output)
    print(text)
    return text
