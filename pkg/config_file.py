from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseSettings, validator
from sympy import isprime

BASE_DIR = Path(__file__).parent

VERSION = "0.2.0"


@dataclass(frozen=True)
class ExitCode:
    passed: int = 0
    failed: int = 1
    parse_error: int = 2
    sampling_exhausted: int = 3
    invalid_input: int = 4


class Settings(BaseSettings):
    default_trials: int = 8
    default_primes: list[int] = [10007, 32003]
    default_seed: int = 0

    sampling_retries: int = 64
    prime_retries: int = 8
    max_expansion_n: int = 7
    max_stabilizer_n: int = 4

    log_level: str = 'WARNING'
    catalog_dir: Path = BASE_DIR / 'catalog'

    @validator('default_primes', each_item=True)
    def check_prime(cls, value):
        if not isprime(value):
            raise ValueError(f"{value} is not a prime")
        return value

    class Config:
        env_file = BASE_DIR / '.env'
        env_prefix = 'DUALCHECK_'


settings = Settings()
