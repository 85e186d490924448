"""Exception hierarchy.

Every error raised on purpose by the package derives from ``SchubertError``.
The CLI maps the three families (user error, resource cap, internal
inconsistency) onto distinct exit codes.
"""


class SchubertError(Exception):
    """Base class for all package errors."""


class UserError(SchubertError, ValueError):
    """Bad input or a violated precondition."""


class InvalidRank(UserError):
    pass


class InvalidCartanMatrix(UserError):
    pass


class IndexOutOfRange(UserError):
    pass


class ParseError(UserError):
    pass


class ContextMismatch(UserError):
    """Two elements or roots come from different root systems."""


class LeviNotInDescents(UserError):
    """The Levi subset J is not contained in the left descent set of w."""


class NotHorospherical(UserError):
    pass


class NotComparable(UserError):
    pass


class NotReduced(UserError):
    pass


class EmptyLevi(UserError):
    pass


class DisconnectedDiagram(UserError):
    pass


class CapExceeded(SchubertError):
    """A configured resource cap would be exceeded."""


class OracleTooLarge(CapExceeded):
    pass


class InternalInconsistency(SchubertError, AssertionError):
    """A cross-check between independently computed quantities failed."""
