"""Exception types shared across the package."""


class OmegaLabError(Exception):
    """Base class for all omegalab errors."""


class DomainError(OmegaLabError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class CapacityError(OmegaLabError, ValueError):
    """An argument exceeds the documented implementation range cap."""


class PreconditionError(OmegaLabError, ValueError):
    """A structural precondition does not hold (e.g. a base table too small)."""


class CacheFormatError(OmegaLabError, ValueError):
    """A binary cache file failed magic/bound verification."""
