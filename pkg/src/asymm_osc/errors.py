"""Exception types shared across the library."""


class AsymmOscError(Exception):
    """Base class for all library errors."""


class PoleError(AsymmOscError, ValueError):
    """Evaluation requested exactly at a pole of the function."""


class DomainError(AsymmOscError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class RangeError(AsymmOscError, ValueError):
    """Argument outside the supported numerical range."""


class ConvergenceError(AsymmOscError, RuntimeError):
    """An iterative scheme failed to converge within its budget."""
