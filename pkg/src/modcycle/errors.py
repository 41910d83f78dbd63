"""Exception types shared across modcycle."""


class ModcycleError(Exception):
    """Base class for all library errors."""


class GraphFormatError(ModcycleError, ValueError):
    """Malformed graph text or an invariant violation while building a graph."""


class NotAWalk(ModcycleError, ValueError):
    """A vertex sequence uses a pair that is not an edge of the host graph."""


class ConditionUnsupported(ModcycleError):
    """The residue set lies outside the regime a polynomial routine handles.

    Raised when the complement of S is not closed under addition mod m
    (or 0 is in S). Such instances are NP-complete or open; use the oracle.
    """


class OracleLimit(ModcycleError):
    """The brute-force oracle refused or abandoned an instance (size or cycle cap)."""


class PreconditionError(ModcycleError, ValueError):
    """An arithmetic precondition failed; carries the violating values."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
