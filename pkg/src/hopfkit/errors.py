"""Exception types raised across the package."""


class HopfkitError(ValueError):
    """Base class; subclasses ValueError so callers can catch either."""


class GroundSetError(HopfkitError):
    """Label sets do not match what an operation requires."""


class CapExceededError(HopfkitError):
    """A size exceeds the configured enumeration cap."""


class SpeciesError(HopfkitError):
    """Unknown species name, malformed expression, or unmet positivity."""


class StructureError(HopfkitError):
    """A construction was asked of a structure that cannot support it."""


class SequenceError(HopfkitError):
    """Malformed or out-of-domain sequence input."""
