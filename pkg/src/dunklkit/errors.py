"""Exception and warning types shared across the package."""


class DunklKitError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgumentError(DunklKitError, ValueError):
    """An argument is malformed or outside the documented domain."""


class NotARootSystemError(InvalidArgumentError):
    """Root data fails reduction, closure, or multiplicity constraints."""


class UnsupportedCaseError(DunklKitError, ValueError):
    """The request is well formed but outside the implemented cases."""


class DegeneratePointError(InvalidArgumentError):
    """A density or measure was requested at a point where it degenerates."""


class AccuracyError(DunklKitError, ArithmeticError):
    """A numeric routine cannot certify the requested accuracy.

    The ``residual`` attribute carries the best available error estimate.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class InternalInvariantError(DunklKitError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class AccuracyWarning(UserWarning):
    """A soft accuracy contract (decay class, tail estimate) was violated."""
