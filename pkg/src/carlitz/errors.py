"""Exception types shared across the package."""


class CarlitzError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(CarlitzError):
    """An argument violates a mathematical precondition."""


class PrecisionError(CarlitzError):
    """The requested computation cannot be completed at this precision.

    ``needed``, when set, is the minimal precision that would suffice.
    """

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


class BelowPrecision(CarlitzError):
    """A quantity is indistinguishable from zero at the current precision."""
