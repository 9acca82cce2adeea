"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: usage errors exit 1, data
errors exit 2, numerical failures exit 3.
"""


class CrrixError(Exception):
    """Base class for all package errors."""


class UsageError(CrrixError):
    """Invalid configuration or mutually exclusive options."""

    exit_code = 1


class DataError(CrrixError):
    """Malformed, inconsistent, or insufficient input data."""

    exit_code = 2


class NumericalError(CrrixError):
    """A numerical procedure could not produce a valid result."""

    exit_code = 3


def require(condition: bool, message: str) -> None:
    """Raise :class:`UsageError` unless ``condition`` holds."""
    if not condition:
        raise UsageError(message)
