"""Exception hierarchy shared across the toolkit.

Each error class carries the process exit code the CLI maps it to:
1 usage, 2 bad input, 3 internal consistency.
"""

from __future__ import annotations


class MasipError(Exception):
    exit_code = 1


class UsageError(MasipError):
    """Caller asked for something the tool cannot do (bad flag combination,
    out-of-range parameter)."""

    exit_code = 1


class InputError(MasipError):
    """An input file is missing, unreadable, or malformed."""

    exit_code = 2


class CatalogError(InputError):
    """Catalog file failed to load or validate."""

    def __init__(self, message: str, path=None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
            if line is not None:
                where += f"{line}:"
            where += " "
        super().__init__(f"{where}{message}")


class AsmParseError(InputError):
    """Assembly source rejected (strict-mode unknown mnemonic, bad encoding)."""

    def __init__(self, message: str, path=None, line: int | None = None, token: str | None = None):
        self.path = path
        self.line = line
        self.token = token
        where = ""
        if path is not None:
            where += str(path)
        if line is not None:
            where += f":{line}"
        if where:
            where += ": "
        super().__init__(f"{where}{message}")


class ConfigError(InputError):
    """Experiment configuration file is malformed."""


class FixtureError(InputError):
    """Requested fixture cardinalities are infeasible or synthesis failed
    verification."""


class ConsistencyError(MasipError):
    """Internal invariant violated (e.g. base not contained in a member set)."""

    exit_code = 3
