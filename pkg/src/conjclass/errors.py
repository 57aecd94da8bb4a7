"""Exception types raised across the package."""


class ConjclassError(Exception):
    """Base class for all package errors."""


class UndecidedError(ConjclassError):
    """An interval comparison stayed undecided at the maximum precision."""


class NoFormulaError(ConjclassError, LookupError):
    """No exact class-number formula is registered for the requested group."""


class NotStoredError(ConjclassError, LookupError):
    """A stored datum (e.g. a minimal degree) is not available."""


class OracleCapError(ConjclassError):
    """A brute-force computation would exceed the configured element cap."""


class CensusError(ConjclassError, ValueError):
    def __init__(self, message, line=None, row=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if row is not None:
            where.append(f"row {row!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.row = row
