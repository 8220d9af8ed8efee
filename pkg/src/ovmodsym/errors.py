"""Exception families shared across the engine.

Each class maps to a distinct CLI exit code (see cli.EXIT_CODES).
"""


class OvmodsymError(Exception):
    """Base class for all engine errors."""


class PrecisionError(OvmodsymError):
    """An operation was asked to certify more digits than the inputs carry."""


class NoSlopeGap(OvmodsymError):
    """The Newton polygon has no separating vertex at the requested bound."""


class ResultantNotUnit(OvmodsymError):
    """Bezout data for a slope split lost all certified digits."""


class NotStabilized(OvmodsymError):
    """Slope factors at two truncation levels disagree beyond the documented loss."""


class DivisionObstruction(OvmodsymError):
    """A Fredholm quotient is not witnessed as exact at working precision."""


class TorsionFound(OvmodsymError):
    """The congruence subgroup has torsion; outside the supported family."""


class ExplodedIndex(OvmodsymError):
    """Coset enumeration exceeded the configured guard limit."""


class NotAMember(OvmodsymError):
    """Matrix fails the membership predicate of the arithmetic group."""


class VerificationFailed(OvmodsymError):
    """A runtime certificate (coset decomposition, cache integrity) failed."""


class NotAPerfectSquare(OvmodsymError):
    """Parabolic characteristic polynomial is not a square at certified precision."""
