"""Exception types shared across the package."""


class WheelkitError(Exception):
    """Base class for all package-specific errors."""


class InputDomainError(WheelkitError, ValueError):
    """An argument is outside the documented input domain."""


class PreconditionError(WheelkitError, ValueError):
    """A documented precondition of an operation does not hold."""


class ResourceLimitError(WheelkitError):
    """An exact search would exceed its configured size bound.

    Raised instead of ever returning a silently incomplete answer.
    """


class ConstructionError(WheelkitError):
    """A witness under construction failed a validity check."""


class LiftingError(WheelkitError):
    """No disjoint choice of replacement paths lifts a subdivision.

    This firing on a shipped gadget instance would falsify the step the
    gadget encodes, so the verification suite treats it as a hard failure.
    """
