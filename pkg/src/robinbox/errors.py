"""Exception types shared across the package."""


class RobinboxError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RobinboxError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DimensionError(DomainError):
    """The geometry has the wrong number of axes for the requested quantity."""


class AlphaZero(DomainError):
    """The requested quantity is undefined at alpha = 0."""


class NoSignChange(RobinboxError):
    """A root bracket does not enclose a sign change."""


class BracketNotFound(RobinboxError):
    """Geometric expansion failed to locate a sign change."""


class MaxIterExceeded(RobinboxError):
    """The iteration budget ran out before reaching tolerance."""


class NumericalFailure(RobinboxError):
    """An internal consistency check failed or a numerical method broke down."""


class Inconsistent(RobinboxError):
    """The inverse spectral data is not realized by any rectangle."""
