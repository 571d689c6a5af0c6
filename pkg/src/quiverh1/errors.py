"""Shared exception types."""


class QuiverH1Error(Exception):
    """Base class for all package errors."""


class InvalidQuiver(QuiverH1Error):
    """A quiver violates a structural invariant (dangling endpoint, duplicate name, ...)."""


class InfinitePathSet(QuiverH1Error):
    """An unbounded path enumeration was requested on a quiver with oriented cycles."""


class InfiniteBasis(QuiverH1Error):
    """The relation-avoiding path set is infinite, so no finite-dimensional algebra exists."""


class InvalidIdeal(QuiverH1Error):
    """A monomial generating set violates minimality or the length >= 2 requirement."""


class NotApplicable(QuiverH1Error):
    """A formula's precondition does not hold for the given presentation."""


class FormulaUnavailable(QuiverH1Error):
    """No closed formula applies; the caller should fall back to the oracle."""


class GuardExceeded(QuiverH1Error):
    """An oracle dimension guard was exceeded; raise the guard to proceed."""


class InvalidPoset(QuiverH1Error):
    """The relation is not a partial order (antisymmetry failure)."""


class ParseError(QuiverH1Error):
    """Input document syntax or resolution error, with a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
