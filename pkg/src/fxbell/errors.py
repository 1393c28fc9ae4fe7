"""Exception hierarchy shared by all fxbell modules."""


class FxBellError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(FxBellError):
    """Input text does not match the documented CSV layout."""


class InsufficientDataError(FxBellError):
    """Too few usable records to perform the requested operation."""


class DomainError(FxBellError):
    """An argument lies outside the mathematical domain of the operation."""


class DataError(FxBellError):
    """Internally inconsistent data (mismatched sizes, incomplete sets)."""


class ConvergenceError(FxBellError):
    """The LP solver exceeded its iteration limit."""


class NoDistributionError(FxBellError):
    """No nonnegative normalized trivariate matches the requested moments."""
