"""Exception types shared across the package."""


class SkyShieldError(Exception):
    """Base class for errors raised by skyshield."""


# geometry
class CoincidentNodes(SkyShieldError):
    pass


class VerticalLink(SkyShieldError):
    pass


# channel / unit conversions
class NonPositiveLinear(SkyShieldError):
    pass


class BelowReferenceDistance(SkyShieldError):
    pass


class NonPositiveFade(SkyShieldError):
    pass


# beamforming
class ZeroChannel(SkyShieldError):
    pass


class DimensionMismatch(SkyShieldError):
    pass


class DegenerateGeometry(SkyShieldError):
    """Desired channel lies (numerically) inside the span that must be nulled."""


# placement
class EmptyGrid(SkyShieldError):
    pass


# scenario configuration
class ConfigError(SkyShieldError):
    """A scenario configuration violates one of its invariants."""
