"""Exception types shared across the package.

The CLI maps these onto exit codes: usage problems exit 1, anything
raised from here exits 2.
"""


class BpcgenError(Exception):
    """Base class for all package-specific failures."""


class InvalidInputError(BpcgenError, ValueError):
    """Input violates an operation's precondition (bad counts, degenerate data)."""


class ConfigError(BpcgenError, ValueError):
    """Inconsistent or malformed configuration."""


class PlyParseError(BpcgenError, ValueError):
    """Malformed PLY file. Carries the 1-based line number where parsing failed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PgmParseError(BpcgenError, ValueError):
    """Malformed PGM file."""


class NumericFailureError(BpcgenError, RuntimeError):
    """Non-finite values appeared during a numeric computation.

    ``context`` describes where (e.g. a generator layer index or a
    training epoch/batch coordinate).
    """

    def __init__(self, message: str, context: dict | None = None):
        self.context = dict(context or {})
        if self.context:
            message = f"{message} ({', '.join(f'{k}={v}' for k, v in self.context.items())})"
        super().__init__(message)
