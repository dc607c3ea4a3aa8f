"""Deterministic grid-search placement of the UAV base station and
greedy ranking of remote-jamming sites."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Sequence

from .channel import (
    BsAntennaPattern,
    FreeSpaceLoS,
    TerrestrialFading,
    dbm_to_watts,
    los_gain,
    pattern_gain,
    terrestrial_gain,
)
from .errors import EmptyGrid
from .geometry import Position, distance, elevation_angle
from .secrecy import LinkBudget, rate, secrecy_rate, sinr

if TYPE_CHECKING:
    from .scenarios import ExpAConfig


@dataclass(frozen=True)
class SearchGrid:
    """1-D grid lo, lo+step, ... up to hi inclusive (last point clamped to hi)."""

    lo: float
    hi: float
    step: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"grid needs lo <= hi, got [{self.lo}, {self.hi}]")
        if not self.step > 0.0:
            raise ValueError(f"grid step must be > 0, got {self.step}")

    def points(self) -> list[float]:
        tol = 1e-9 * self.step
        n = int(math.floor((self.hi - self.lo) / self.step + tol)) + 1
        pts = [self.lo + k * self.step for k in range(n)]
        if pts[-1] < self.hi - tol:
            pts.append(self.hi)
        return pts


def grid_argmax_1d(objective: Callable[[float], float], grid) -> tuple[float, float]:
    """Grid point maximizing `objective`; ties break toward the smallest x."""
    pts = grid.points()
    if not pts:
        raise EmptyGrid("cannot search an empty grid")
    best_x = pts[0]
    best_v = objective(best_x)
    for x in pts[1:]:
        v = objective(x)
        if v > best_v:
            best_x, best_v = x, v
    return best_x, best_v


def exp_a_objective(
    config: "ExpAConfig", p_u_watts: float, p_j_watts: float
) -> Callable[[float], float]:
    """Secrecy rate of the UAV-BS downlink as a function of its abscissa.

    All links are free-space. The jammer hovers directly above the
    eavesdropper at the UAV altitude and interferes with both receivers;
    p_j_watts = 0 removes it.
    """
    user = config.user
    eve = Position(config.eve_x, 0.0, 0.0)
    h = config.uav_altitude
    los = FreeSpaceLoS(config.gamma0)
    if p_j_watts > 0.0:
        jammer = Position(config.eve_x, 0.0, h)
        jam_user = ((p_j_watts, los_gain(los, distance(jammer, user))),)
        jam_eve = ((p_j_watts, los_gain(los, distance(jammer, eve))),)
    else:
        jam_user = ()
        jam_eve = ()

    def objective(x: float) -> float:
        uav = Position(x, 0.0, h)
        sinr_user = sinr(LinkBudget((p_u_watts, los_gain(los, distance(uav, user))), jam_user))
        sinr_eve = sinr(LinkBudget((p_u_watts, los_gain(los, distance(uav, eve))), jam_eve))
        return secrecy_rate(rate(sinr_user), rate(sinr_eve))

    return objective


def optimize_uav_bs(
    config: "ExpAConfig", p_u_watts: float, with_jammer: bool
) -> tuple[float, float]:
    """Grid-search the UAV-BS abscissa; returns (x_star, secrecy at x_star)."""
    p_j_watts = dbm_to_watts(config.p_j_dbm) if with_jammer else 0.0
    objective = exp_a_objective(config, p_u_watts, p_j_watts)
    return grid_argmax_1d(objective, config.search)


def jam_to_leak_ratio(
    candidate: Position,
    uav: Position,
    protected_center: Position,
    los: FreeSpaceLoS,
    terrestrial: TerrestrialFading,
    pattern: BsAntennaPattern,
) -> float:
    """Jamming power delivered to the UAV per unit leaked to the protected cell.

    Numerator: LoS gain to the UAV through the candidate's antenna
    pattern. Denominator: mean terrestrial gain (fade = 1) to the cell
    center.
    """
    reach = los_gain(los, distance(candidate, uav)) * pattern_gain(
        pattern, elevation_angle(candidate, uav)
    )
    leak = terrestrial_gain(terrestrial, distance(candidate, protected_center), 1.0)
    return reach / leak


def rank_jammer_bs(
    candidates: Sequence[Position],
    uav: Position,
    protected_cell_center: Position,
    los: FreeSpaceLoS,
    terrestrial: TerrestrialFading,
    pattern: BsAntennaPattern,
) -> list[Position]:
    """Candidates sorted by descending jam-to-leak ratio; ties keep input order."""
    if not candidates:
        raise ValueError("need at least one candidate site")
    scored = [
        (-jam_to_leak_ratio(c, uav, protected_cell_center, los, terrestrial, pattern), i)
        for i, c in enumerate(candidates)
    ]
    scored.sort()
    return [candidates[i] for _, i in scored]
