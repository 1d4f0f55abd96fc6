"""Writes the sample polynomials of the catalog directory, one canonical file per entry."""
import logging

from config_file import VERSION, settings
from src.poly.text import format_poly
from src.repository.catalog import resolve

logger = logging.getLogger(__name__)

SAMPLES = {
    'det3.poly': 'det:3',
    'det4.poly': 'det:4',
    'perm3.poly': 'perm:3',
    'plambda3.poly': 'plambda:3',
    'padded_perm2_deg3.poly': 'padded:perm:2:3',
    'generic_cubic_9.poly': 'random:3:9:0',
    'cone_4_of_9.poly': 'cone:4:3:9:0',
    'conic.poly': 'x0^2 + x1^2 + x2^2',
    'perm2_squared.poly': 'x0^2*x3^2 + 2*x0*x1*x2*x3 + x1^2*x2^2',
}


def main():
    settings.catalog_dir.mkdir(parents=True, exist_ok=True)
    for name, spec in SAMPLES.items():
        entry = resolve(spec)
        header = f"# {spec}\n# {entry.poly.nvars} variables, written by dualcheck {VERSION}\n"
        path = settings.catalog_dir / name
        path.write_text(header + format_poly(entry.poly) + '\n', encoding='utf-8')
        logger.info("wrote %s", path)


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    main()
