"""Exception types shared across the package."""


class FuzzTopError(Exception):
    """Base class for every error raised by fuzztop."""


class InputError(FuzzTopError, ValueError):
    """Malformed or mismatched input (bad carrier, out-of-range index, ...)."""


class PreconditionError(FuzzTopError):
    """A construction's mathematical hypothesis does not hold for the input."""


class ConsistencyError(FuzzTopError):
    """Two independent evaluation routes disagreed; indicates a bug."""
