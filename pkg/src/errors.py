from typing import Optional

from config_file import ExitCode


class DualCheckError(Exception):
    """
    Base error of the package. Like an HTTP error it carries a human-readable detail and
    the code the command line exits with.
    """
    exit_code: int = ExitCode.invalid_input

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class InvalidInputError(DualCheckError):
    pass


class FieldMismatchError(InvalidInputError):
    pass


class UnsupportedSizeError(InvalidInputError):
    pass


class DegenerateFlagError(InvalidInputError):
    pass


class LineAtInfinityError(InvalidInputError):
    """Leading coefficient p_d vanishes: the line D lies on Z(P_L). Retryable."""


class PolyParseError(DualCheckError):
    exit_code = ExitCode.parse_error

    def __init__(self, detail: str, line: int = 1, column: int = 1):
        super().__init__(f"{detail} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownVariableError(PolyParseError):
    pass


class SamplingExhaustedError(DualCheckError):
    exit_code = ExitCode.sampling_exhausted
