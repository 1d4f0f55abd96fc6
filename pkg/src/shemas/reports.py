from typing import Any, Optional, Union

from pydantic import BaseModel, Field, validator

from config_file import VERSION

PASS = 'PASS'
FAIL = 'FAIL'


class RunConfig(BaseModel):
    command: str = Field(default=..., example="check-eqn")
    poly: Optional[str] = Field(default=None, example="det:4")
    k: Optional[int] = Field(default=None, ge=0, example=6)
    n: Optional[int] = Field(default=None, ge=1, example=5)
    d: Optional[int] = Field(default=None, ge=1, example=4)
    nvars: Optional[int] = Field(default=None, ge=1, example=9)
    check: Optional[str] = Field(default=None, example="curve")
    trials: int = Field(default=8, ge=1)
    primes: list[int] = Field(default=[10007, 32003], min_items=1)
    seed: int = 0
    output: Optional[str] = None

    @validator('primes')
    def primes_are_distinct(cls, value):
        if len(set(value)) != len(value):
            raise ValueError("Primes must be distinct")
        return value


class FlagWitness(BaseModel):
    prime: int
    trial: int
    columns: list[list[int]]
    remainder: list[int] = Field(description="Remainder coefficients, index i belongs to x^i y^(d-1-i)")


class PointWitness(BaseModel):
    prime: int
    trial: int
    point: list[int] = Field(description="w, flattened row-major")
    direction: list[int] = Field(description="Kernel vector X, flattened row-major")
    value: int = Field(description="X^T H_pi(w) X")


class Report(BaseModel):
    command: str
    version: str = VERSION
    config: RunConfig
    verdict: str = Field(default=PASS, regex=f"^({PASS}|{FAIL})$")
    values: dict[str, Any] = {}
    polynomial: Optional[str] = None
    witnesses: list[Union[FlagWitness, PointWitness]] = []
    warnings: list[str] = []
    timing: Optional[float] = Field(default=None, description="Wall time in seconds; not reproducible")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def stable_json(self) -> str:
        """Byte-reproducible JSON of everything but the timing."""
        return self.json(sort_keys=True, indent=2, exclude={'timing'})
