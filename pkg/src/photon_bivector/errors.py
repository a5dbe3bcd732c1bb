"""Exception types raised by the constructions in this package."""


class BivectorError(ValueError):
    """Base class for invalid-input conditions."""


class NotNull(BivectorError):
    """Four-momentum violates the massless dispersion relation."""


class DegenerateDirection(BivectorError):
    """A construction's normalization denominator vanishes for this direction."""


class NotTransverse(BivectorError):
    """Bivector has a non-zero time component where a transverse one is required."""


class NonProportionalReturn(BivectorError):
    """A transported state did not return proportional to its starting state."""


class ZeroOverlap(BivectorError):
    """Overlap of two states is too small for a meaningful relative phase."""


class DimensionLimit(BivectorError):
    """Requested tensor power exceeds the supported size."""


class NonPositiveWidth(BivectorError):
    """Envelope width must be strictly positive."""


class MismatchedModes(BivectorError):
    """Superposed packets do not share a mode magnitude."""
