"""Exception types shared across the package.

The command line layer maps these onto exit codes: invalid input exits
with 1, insufficient data with 2, and internal assertion failures with 3.
"""


class LctError(Exception):
    """Base class for all package errors."""


class InvalidInputError(LctError, ValueError):
    """Raised when arguments violate a documented precondition."""


class NotFanoError(InvalidInputError):
    """Raised when an operation needs k > d but the weight system has k <= d."""


class InsufficientDataError(LctError):
    """Raised when an estimate cannot be formed from the data that survived."""
