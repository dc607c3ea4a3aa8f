"""3D node positions, distances and angles.

The ground plane is z = 0 and altitudes are z > 0. Angles are degrees at
the API boundary; radians appear only inside the trig calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentNodes, ConfigError, VerticalLink

# default validation bounds (m); scenario configs may override
GROUND_Z_MAX = 100.0
AERIAL_Z_MAX = 10000.0


@dataclass(frozen=True)
class Position:
    """A point in meters; z is the altitude above the ground plane."""

    x: float
    y: float
    z: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise ValueError(
                f"coordinates must be finite, got ({self.x}, {self.y}, {self.z})"
            )


def distance(a: Position, b: Position) -> float:
    """Euclidean distance in meters (symmetric, >= 0)."""
    return math.sqrt((a.x - b.x) ** 2 + (a.y - b.y) ** 2 + (a.z - b.z) ** 2)


def horizontal_distance(a: Position, b: Position) -> float:
    """Distance between the xy projections, in meters."""
    return math.hypot(a.x - b.x, a.y - b.y)


def elevation_angle(observer: Position, target: Position) -> float:
    """Elevation of `target` seen from `observer`, degrees in [-90, +90].

    Positive when the target sits above the observer's horizontal plane.
    """
    if observer == target:
        raise CoincidentNodes(f"elevation undefined: observer equals target {observer}")
    return math.degrees(
        math.atan2(target.z - observer.z, horizontal_distance(observer, target))
    )


def azimuth_angle(observer: Position, target: Position) -> float:
    """Azimuth of `target` from `observer`, degrees in [0, 360).

    Measured from the +x axis, counterclockwise. Undefined for vertical
    links (coincident xy projections).
    """
    dx = target.x - observer.x
    dy = target.y - observer.y
    if dx == 0.0 and dy == 0.0:
        raise VerticalLink("azimuth undefined: xy projections coincide")
    return math.degrees(math.atan2(dy, dx)) % 360.0


def check_ground_node(pos: Position, name: str = "node", z_max: float = GROUND_Z_MAX) -> None:
    """Raise ConfigError unless 0 <= z <= z_max."""
    if not 0.0 <= pos.z <= z_max:
        raise ConfigError(f"{name}: ground node altitude must be in [0, {z_max}] m, got {pos.z}")


def check_aerial_node(z: float, name: str = "node", z_max: float = AERIAL_Z_MAX) -> None:
    """Raise ConfigError unless 0 < z <= z_max."""
    if not 0.0 < z <= z_max:
        raise ConfigError(f"{name}: aerial altitude must be in (0, {z_max}] m, got {z}")
