"""Exception hierarchy shared across the package.

CLI exit codes: 0 success, 1 verification failure, 2 input error,
3 resource refusal.
"""


class TwfragError(Exception):
    """Base class for all package errors."""


class InputError(TwfragError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class ParseError(InputError):
    """Graph file syntax error, carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ResourceRefusal(TwfragError):
    """Instance exceeds a configured size cap (CLI exit code 3)."""


class ConfigError(InputError):
    """Invalid scheme or sweep configuration."""


class InternalConsistencyError(TwfragError):
    """A structural precondition that the pipeline itself guarantees was
    violated; signals a bug, not bad user input."""
