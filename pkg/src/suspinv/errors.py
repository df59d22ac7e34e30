"""Exception hierarchy.

Every domain error carries its class name as ``name`` so the CLI can report
which precondition failed without a lookup table.
"""


class SuspinvError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ParseError(SuspinvError):
    pass


# exact algebra
class Reducible(SuspinvError):
    pass


class NotIsolating(SuspinvError):
    pass


class FieldMismatch(SuspinvError):
    pass


class DivisionByZero(SuspinvError, ZeroDivisionError):
    pass


class NotSquare(SuspinvError):
    pass


class NotPrimitive(SuspinvError):
    pass


# systems / groups
class AperiodicityCheckFailed(SuspinvError):
    pass


class DegenerateBase(SuspinvError):
    pass


class DimensionMismatch(SuspinvError):
    pass


# invariants / comparison
class RationalTime(SuspinvError):
    pass


class UnsupportedUnits(SuspinvError):
    pass


class MalformedCertificate(SuspinvError):
    pass


# entropy / measure
class HorizonTooLarge(SuspinvError):
    pass


class IllegalWord(SuspinvError):
    pass
