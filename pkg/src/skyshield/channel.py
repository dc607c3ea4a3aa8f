"""Noise-normalized link gains and unit conversions.

All gains are per watt of transmit power with the receiver noise power
normalized to one, so a clean link has SNR = P_watts * gain. Air-ground
links are deterministic inverse-square loss; terrestrial links combine a
power-law loss with a unit-mean exponential power fade (Rayleigh
amplitude). Gain functions accept scalars or numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BelowReferenceDistance, NonPositiveFade, NonPositiveLinear


def dbm_to_watts(p_dbm: float) -> float:
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


def db_to_linear(x_db: float) -> float:
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    if x <= 0.0:
        raise NonPositiveLinear(f"cannot express {x} in dB")
    return 10.0 * math.log10(x)


@dataclass(frozen=True)
class FreeSpaceLoS:
    """Inverse-square loss; gamma0 is the gain (1/W) at the 1 m reference."""

    gamma0: float = 1e8

    def __post_init__(self):
        if not self.gamma0 > 0.0:
            raise ValueError(f"gamma0 must be > 0, got {self.gamma0}")


@dataclass(frozen=True)
class TerrestrialFading:
    """Power-law loss with exponent alpha times a unit-mean exponential fade."""

    gamma0: float = 1e8
    alpha: float = 3.5

    def __post_init__(self):
        if not self.gamma0 > 0.0:
            raise ValueError(f"gamma0 must be > 0, got {self.gamma0}")
        if not self.alpha >= 2.0:
            raise ValueError(f"alpha must be >= 2, got {self.alpha}")


@dataclass(frozen=True)
class BsAntennaPattern:
    """Fixed downtilted vertical element pattern with a sidelobe floor.

    Gain is 0 dB at the downtilt direction and never drops below
    -max_attenuation_db.
    """

    downtilt_deg: float = 10.0
    theta3db_deg: float = 10.0
    max_attenuation_db: float = 20.0

    def __post_init__(self):
        if not self.theta3db_deg > 0.0:
            raise ValueError(f"theta3db_deg must be > 0, got {self.theta3db_deg}")
        if not self.max_attenuation_db >= 0.0:
            raise ValueError(
                f"max_attenuation_db must be >= 0, got {self.max_attenuation_db}"
            )


def los_gain(model: FreeSpaceLoS, d):
    """Noise-normalized gain per watt of a line-of-sight link at distance d >= 1 m."""
    if np.ndim(d) == 0:
        d = float(d)
        if d < 1.0:
            raise BelowReferenceDistance(f"distance {d} m is below the 1 m reference")
        return model.gamma0 / (d * d)
    d = np.asarray(d, dtype=float)
    if np.any(d < 1.0):
        raise BelowReferenceDistance("distances below the 1 m reference")
    return model.gamma0 / np.square(d)


def terrestrial_gain(model: TerrestrialFading, d, fade):
    """Noise-normalized gain per watt of a terrestrial link: gamma0 * d^-alpha * fade."""
    if np.ndim(d) == 0 and np.ndim(fade) == 0:
        d = float(d)
        fade = float(fade)
        if d < 1.0:
            raise BelowReferenceDistance(f"distance {d} m is below the 1 m reference")
        if fade <= 0.0:
            raise NonPositiveFade(f"fade must be > 0, got {fade}")
        return model.gamma0 * d ** (-model.alpha) * fade
    d = np.asarray(d, dtype=float)
    fade = np.asarray(fade, dtype=float)
    if np.any(d < 1.0):
        raise BelowReferenceDistance("distances below the 1 m reference")
    if np.any(fade <= 0.0):
        raise NonPositiveFade("fades must be > 0")
    return model.gamma0 * d ** (-model.alpha) * fade


def sample_fade(rng: np.random.Generator, size=None):
    """Unit-mean exponential power fade (Rayleigh amplitude); scalar when size is None."""
    return rng.standard_exponential(size)


def pattern_gain(pattern: BsAntennaPattern, elevation_deg):
    """Linear element gain (<= 1) toward a target at the given elevation.

    Attenuation in dB is min(12 * ((elev + downtilt) / theta3db)^2, cap),
    i.e. a parabolic main lobe around the downtilt direction with a
    sidelobe floor.
    """
    deviation = (np.asarray(elevation_deg, dtype=float) + pattern.downtilt_deg) / pattern.theta3db_deg
    att_db = np.minimum(12.0 * np.square(deviation), pattern.max_attenuation_db)
    gain = 10.0 ** (-att_db / 10.0)
    if np.ndim(elevation_deg) == 0:
        return float(gain)
    return gain
