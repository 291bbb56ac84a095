"""Exception types raised by stringy_calc."""


class StringyError(ValueError):
    """Base class for all library errors."""


class NonUnitConstantTerm(StringyError):
    pass


class NotLogTerminal(StringyError):
    pass


class InconsistentEpoly(StringyError):
    pass


class BadSubsetKey(StringyError):
    pass


class MissingEpoly(StringyError):
    pass


class SymbolicPathUnavailable(StringyError):
    pass


class PoleAtOne(StringyError):
    pass


class OutOfRange(StringyError):
    pass


class TableTooShort(StringyError):
    pass


class SchemaError(StringyError):
    """Malformed stratification JSON."""
