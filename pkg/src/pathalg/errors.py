"""Exception types shared across the package."""


class PathAlgError(ValueError):
    """Base class for domain errors raised by this package."""


class CompositionError(PathAlgError):
    """Two paths were composed whose endpoints do not match."""


class NotReducedError(PathAlgError):
    """An operation required a reduced set of paths and got one that is not."""


class TruncatedBasisError(PathAlgError):
    """A certified answer was requested from a degree-truncated Groebner basis."""


class InfiniteCollectionError(PathAlgError):
    """A finite listing was requested from an infinite degree collection."""
