"""Exception types shared across the package."""


class GonalGeoError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(GonalGeoError, ValueError):
    """Invalid domain parameters: parity, negative genus, bad ranges."""


class InvariantViolation(GonalGeoError):
    """An exact identity that must hold failed; indicates a bug or corrupt data."""


class BudgetExceeded(GonalGeoError):
    """A configured enumeration or search ceiling was exhausted."""


class CapacityError(GonalGeoError):
    """Requested size exceeds what this implementation is built to handle."""
