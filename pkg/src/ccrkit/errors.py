"""Exception hierarchy used across the package."""


class CcrkitError(Exception):
    """Base class for all errors raised by ccrkit."""


class ValidationError(CcrkitError):
    """An input violates a structural invariant (shape, norm, trace, ...)."""


class CapacityError(CcrkitError):
    """A requested object exceeds the configured dimension cap."""


class PreconditionError(CcrkitError):
    """A state does not satisfy the mathematical precondition of an operation."""


class NumericError(CcrkitError):
    """An iterative numeric routine failed to converge."""
