"""
Exception hierarchy shared by every subpackage.

Each exception class carries the process exit code the CLI reports for it.
"""

from typing import Optional


class IndsubError(Exception):
    """Base class for all errors raised by the library."""

    exit_code: int = 1


class InputError(IndsubError, ValueError):
    """Malformed input or a violated data invariant."""

    exit_code = 1


class DomainError(InputError):
    """Operation undefined for the given arguments (e.g. inverse of zero)."""


class HypothesisError(InputError):
    """A hypothesis checked at run time does not hold (e.g. Φ is not edge-monotone)."""


class PropertySyntaxError(InputError):
    """Property text does not conform to the grammar."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{location}")


class PropertySemanticError(PropertySyntaxError):
    """Property text parses but is meaningless (e.g. zero denominator)."""


class CapacityError(IndsubError, RuntimeError):
    """A desk-scale capacity limit is exceeded."""

    exit_code = 2


class FalsifiedLemmaError(IndsubError, AssertionError):
    """
    A search whose success is guaranteed under verified hypotheses came back empty,
    or a machine check of a proved statement failed. Always indicates a bug.
    """

    exit_code = 3


def ensure_capacity(value: int, cap: int, what: str) -> None:
    """Raise CapacityError when value exceeds cap."""
    if value > cap:
        raise CapacityError(f"{what} is {value}, exceeds the limit of {cap}")
