"""Network layout generation, scenario configs and the end-to-end runners.

Three runners are provided:

* run_exp_a  -- deterministic secrecy-rate sweep over the UAV-BS transmit
  power for three placement schemes, with an optional cooperative UAV
  jammer hovering above the eavesdropper.
* run_exp_b  -- Monte-Carlo secrecy rate of a terrestrial downlink
  overheard by an aerial eavesdropper, versus the number of remote
  jamming sites, for several BS transmit powers.
* run_beam_demo -- transmit nulling with a planar array: how elevation
  separation (i.e. transmitter altitude) governs the post-nulling user
  gain and secrecy rate.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field, fields
from typing import Sequence

import numpy as np

from .beamforming import UpaGeometry, beam_power_gain, mrt, upa_steering, zf_null
from .channel import (
    BsAntennaPattern,
    FreeSpaceLoS,
    TerrestrialFading,
    dbm_to_watts,
    los_gain,
    pattern_gain,
    sample_fade,
    terrestrial_gain,
)
from .errors import ConfigError, DegenerateGeometry
from .geometry import (
    Position,
    azimuth_angle,
    check_aerial_node,
    check_ground_node,
    distance,
    elevation_angle,
    horizontal_distance,
)
from .placement import SearchGrid, exp_a_objective, optimize_uav_bs, rank_jammer_bs
from .secrecy import CLAMP_MODES, ergodic_secrecy, rate, secrecy_rate

SCHEMES = ("optimized_with_jammer", "optimized_no_jammer", "fixed_above_user")

EXP_A_COLUMNS = ("p_u_dbm", "scheme", "x_star_m", "secrecy_bps_hz")
EXP_B_COLUMNS = ("p_t_dbm", "n_jammers", "secrecy_mean_bps_hz", "ci95_bps_hz", "trials", "seed")
BEAM_DEMO_COLUMNS = (
    "altitude_m",
    "elev_sep_deg",
    "user_gain_fraction",
    "secrecy_zf_bps_hz",
    "secrecy_mrt_bps_hz",
    "degenerate",
)


@dataclass
class SweepTable:
    """Tidy rectangular result table: one dict per row, fixed column order."""

    columns: tuple[str, ...]
    rows: list[dict]

    def __post_init__(self):
        for row in self.rows:
            if set(row) != set(self.columns):
                raise ValueError(f"row keys {sorted(row)} do not match columns {self.columns}")

    @staticmethod
    def _cell(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            return repr(value)
        return str(value)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(self._cell(row[c]) for c in self.columns) + "\n")
        return buf.getvalue()


def _positive(value, name):
    if not value > 0:
        raise ConfigError(f"{name} must be > 0, got {value}")


def _position(value, name) -> Position:
    if isinstance(value, Position):
        return value
    try:
        x, y, z = value
        return Position(float(x), float(y), float(z))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{name} must be an (x, y, z) triple, got {value!r}") from exc


def _from_dict(cls, data: dict, positions=(), patterns=(), grids=()):
    known = {f.name for f in fields(cls)}
    kwargs = {}
    for key, value in data.items():
        if key not in known:
            raise ConfigError(f"unknown field {key!r} for {cls.__name__}")
        if key in positions:
            value = _position(value, key)
        elif key in patterns:
            if not isinstance(value, dict):
                raise ConfigError(f"{key} must be an object, got {value!r}")
            try:
                value = BsAntennaPattern(**value)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"{key}: {exc}") from exc
        elif key in grids:
            if not isinstance(value, dict):
                raise ConfigError(f"{key} must be an object with lo/hi/step, got {value!r}")
            try:
                value = SearchGrid(**value)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"{key}: {exc}") from exc
        elif isinstance(value, list):
            value = tuple(value)
        kwargs[key] = value
    cfg = cls(**kwargs)
    cfg.validate()
    return cfg


@dataclass
class ExpAConfig:
    """UAV-BS downlink with a ground eavesdropper and optional UAV jammer.

    The layout is a side view embedded at y = 0: the user sits at the
    origin, the eavesdropper at (eve_x, 0, 0), and both UAVs fly at
    uav_altitude. The jammer (power p_j_dbm) hovers right above the
    eavesdropper. All links are free-space with reference gain gamma0.
    """

    user: Position = Position(0.0, 0.0, 0.0)
    eve_x: float = 400.0
    uav_altitude: float = 200.0
    gamma0: float = 1e8
    p_j_dbm: float = 5.0
    p_u_sweep_dbm: tuple = tuple(float(p) for p in range(31))
    search: SearchGrid = field(default_factory=lambda: SearchGrid(-500.0, 500.0, 0.5))
    schemes: tuple = SCHEMES

    def validate(self):
        check_ground_node(self.user, "user")
        if self.user.y != 0.0:
            raise ConfigError(f"user must lie on the x axis (y = 0), got y = {self.user.y}")
        if not math.isfinite(self.eve_x):
            raise ConfigError(f"eve_x must be finite, got {self.eve_x}")
        check_aerial_node(self.uav_altitude, "uav_altitude")
        _positive(self.gamma0, "gamma0")
        if not self.p_u_sweep_dbm:
            raise ConfigError("p_u_sweep_dbm must not be empty")
        if not self.schemes:
            raise ConfigError("schemes must not be empty")
        for s in self.schemes:
            if s not in SCHEMES:
                raise ConfigError(f"unknown scheme {s!r}; choose from {SCHEMES}")

    @classmethod
    def from_dict(cls, data: dict) -> "ExpAConfig":
        return _from_dict(cls, data, positions=("user",), grids=("search",))

    def to_dict(self) -> dict:
        return {
            "user": [self.user.x, self.user.y, self.user.z],
            "eve_x": self.eve_x,
            "uav_altitude": self.uav_altitude,
            "gamma0": self.gamma0,
            "p_j_dbm": self.p_j_dbm,
            "p_u_sweep_dbm": list(self.p_u_sweep_dbm),
            "search": {"lo": self.search.lo, "hi": self.search.hi, "step": self.search.step},
            "schemes": list(self.schemes),
        }


@dataclass
class ExpBConfig:
    """Terrestrial downlink wiretapped by a UAV, protected by remote jammers.

    A hexagonal grid of sites surrounds the serving BS at the origin; the
    UAV eavesdropper hovers uav_offset meters away horizontally. Jamming
    sites are chosen greedily by jam-to-leak ratio. Air-ground links are
    free-space (gamma0_los); terrestrial links fade with exponent alpha
    around gamma0_terrestrial.
    """

    cell_radius: float = 800.0
    rings: int = 2
    isd: float = 1600.0
    bs_height: float = 25.0
    uav_offset: float = 1000.0
    uav_altitude: float = 200.0
    pattern: BsAntennaPattern = field(default_factory=BsAntennaPattern)
    p_t_sweep_dbm: tuple = (35.0, 40.0, 45.0)
    n_jammers_sweep: tuple = tuple(range(19))
    alpha: float = 3.5
    gamma0_los: float = 1e8
    gamma0_terrestrial: float = 3e7
    trials: int = 10000
    seed: int = 42
    clamp: str = "per_trial"

    def n_sites(self) -> int:
        return 1 + 3 * self.rings * (self.rings + 1)

    def validate(self):
        _positive(self.cell_radius, "cell_radius")
        if self.rings < 0:
            raise ConfigError(f"rings must be >= 0, got {self.rings}")
        _positive(self.isd, "isd")
        check_ground_node(Position(0.0, 0.0, self.bs_height), "bs_height")
        if self.uav_offset < 0.0:
            raise ConfigError(f"uav_offset must be >= 0, got {self.uav_offset}")
        check_aerial_node(self.uav_altitude, "uav_altitude")
        if not self.p_t_sweep_dbm:
            raise ConfigError("p_t_sweep_dbm must not be empty")
        if not self.n_jammers_sweep:
            raise ConfigError("n_jammers_sweep must not be empty")
        max_jammers = self.n_sites() - 1
        for n in self.n_jammers_sweep:
            if not 0 <= n <= max_jammers:
                raise ConfigError(
                    f"n_jammers_sweep entries must be in [0, {max_jammers}], got {n}"
                )
        if not self.alpha >= 2.0:
            raise ConfigError(f"alpha must be >= 2, got {self.alpha}")
        _positive(self.gamma0_los, "gamma0_los")
        _positive(self.gamma0_terrestrial, "gamma0_terrestrial")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.clamp not in CLAMP_MODES:
            raise ConfigError(f"clamp must be one of {CLAMP_MODES}, got {self.clamp!r}")

    @classmethod
    def from_dict(cls, data: dict) -> "ExpBConfig":
        return _from_dict(cls, data, patterns=("pattern",))

    def to_dict(self) -> dict:
        return {
            "cell_radius": self.cell_radius,
            "rings": self.rings,
            "isd": self.isd,
            "bs_height": self.bs_height,
            "uav_offset": self.uav_offset,
            "uav_altitude": self.uav_altitude,
            "pattern": {
                "downtilt_deg": self.pattern.downtilt_deg,
                "theta3db_deg": self.pattern.theta3db_deg,
                "max_attenuation_db": self.pattern.max_attenuation_db,
            },
            "p_t_sweep_dbm": list(self.p_t_sweep_dbm),
            "n_jammers_sweep": list(self.n_jammers_sweep),
            "alpha": self.alpha,
            "gamma0_los": self.gamma0_los,
            "gamma0_terrestrial": self.gamma0_terrestrial,
            "trials": self.trials,
            "seed": self.seed,
            "clamp": self.clamp,
        }


@dataclass
class BeamDemoConfig:
    """Planar-array nulling demo: one transmitter, one user, one eavesdropper."""

    nx: int = 4
    ny: int = 4
    spacing: float = 0.5
    tx_altitudes: tuple = (0.0, 10.0, 25.0, 50.0, 100.0, 200.0, 400.0)
    user: Position = Position(100.0, 0.0, 0.0)
    eve: Position = Position(300.0, 0.0, 0.0)
    gamma0: float = 1e8
    p_dbm: float = 10.0

    def validate(self):
        if self.nx < 1 or self.ny < 1:
            raise ConfigError(f"array must have nx, ny >= 1, got {self.nx}x{self.ny}")
        _positive(self.spacing, "spacing")
        if not self.tx_altitudes:
            raise ConfigError("tx_altitudes must not be empty")
        for alt in self.tx_altitudes:
            if alt < 0.0:
                raise ConfigError(f"tx_altitudes entries must be >= 0, got {alt}")
        check_ground_node(self.user, "user")
        check_ground_node(self.eve, "eve")
        origin = Position(0.0, 0.0, 0.0)
        for name, node in (("user", self.user), ("eve", self.eve)):
            if horizontal_distance(origin, node) < 1.0:
                raise ConfigError(
                    f"{name} must be at least 1 m from the transmitter's ground projection"
                )
        _positive(self.gamma0, "gamma0")

    @classmethod
    def from_dict(cls, data: dict) -> "BeamDemoConfig":
        return _from_dict(cls, data, positions=("user", "eve"))

    def to_dict(self) -> dict:
        return {
            "nx": self.nx,
            "ny": self.ny,
            "spacing": self.spacing,
            "tx_altitudes": list(self.tx_altitudes),
            "user": [self.user.x, self.user.y, self.user.z],
            "eve": [self.eve.x, self.eve.y, self.eve.z],
            "gamma0": self.gamma0,
            "p_dbm": self.p_dbm,
        }


def hex_layout(rings: int, isd: float, height: float = 0.0) -> list[Position]:
    """Hexagonal lattice of 1 + 3*rings*(rings+1) sites, serving site first.

    Sites are ordered by ring then by angle from the +x axis; nearest
    neighbors are isd apart and every site sits at the given height.
    """
    if rings < 0:
        raise ValueError(f"rings must be >= 0, got {rings}")
    keyed = []
    for i in range(-rings, rings + 1):
        for j in range(-rings, rings + 1):
            ring = (abs(i) + abs(j) + abs(i + j)) // 2
            if ring > rings:
                continue
            x = isd * (i + 0.5 * j)
            y = isd * (math.sqrt(3) / 2.0 * j)
            angle = math.atan2(y, x) % (2.0 * math.pi) if ring else 0.0
            keyed.append((ring, angle, Position(x, y, height)))
    keyed.sort(key=lambda t: (t[0], t[1]))
    return [p for _, _, p in keyed]


def drop_user(rng: np.random.Generator, cell_center: Position, radius: float) -> Position:
    """Uniform random ground position in the disk around cell_center.

    Rejection-free polar sampling: the first draw sets the radius via the
    square-root law, the second the angle.
    """
    if not radius > 0.0:
        raise ValueError(f"radius must be > 0, got {radius}")
    u = rng.random(2)
    r = radius * math.sqrt(u[0])
    theta = 2.0 * math.pi * u[1]
    return Position(cell_center.x + r * math.cos(theta), cell_center.y + r * math.sin(theta), 0.0)


def run_exp_a(config: ExpAConfig) -> SweepTable:
    """Secrecy rate versus UAV-BS transmit power for the configured schemes.

    Fully deterministic: no fading on any link. Optimized schemes grid
    search the UAV-BS abscissa; the fixed scheme hovers right above the
    user.
    """
    config.validate()
    rows = []
    for p_dbm in config.p_u_sweep_dbm:
        p_w = dbm_to_watts(p_dbm)
        for scheme in config.schemes:
            if scheme == "optimized_with_jammer":
                x_star, value = optimize_uav_bs(config, p_w, with_jammer=True)
            elif scheme == "optimized_no_jammer":
                x_star, value = optimize_uav_bs(config, p_w, with_jammer=False)
            else:
                x_star = config.user.x
                value = exp_a_objective(config, p_w, 0.0)(x_star)
            rows.append(
                {
                    "p_u_dbm": float(p_dbm),
                    "scheme": scheme,
                    "x_star_m": float(x_star),
                    "secrecy_bps_hz": value,
                }
            )
    return SweepTable(EXP_A_COLUMNS, rows)


def _exp_b_geometry(config: ExpBConfig):
    """Deterministic pieces shared by every Exp-B sweep point."""
    sites = hex_layout(config.rings, config.isd, config.bs_height)
    serving, candidates = sites[0], sites[1:]
    uav = Position(config.uav_offset, 0.0, config.uav_altitude)
    center = Position(serving.x, serving.y, 0.0)
    los = FreeSpaceLoS(config.gamma0_los)
    terrestrial = TerrestrialFading(config.gamma0_terrestrial, config.alpha)
    ranked = rank_jammer_bs(candidates, uav, center, los, terrestrial, config.pattern)
    g_eve_serving = los_gain(los, distance(serving, uav)) * pattern_gain(
        config.pattern, elevation_angle(serving, uav)
    )
    g_eve_jam = np.array(
        [
            los_gain(los, distance(j, uav)) * pattern_gain(config.pattern, elevation_angle(j, uav))
            for j in ranked
        ]
    )
    return serving, ranked, center, los, terrestrial, g_eve_serving, g_eve_jam


def make_exp_b_sampler(config: ExpBConfig, p_t_watts: float, n_jammers: int):
    """Per-trial sampler for one Exp-B sweep point.

    Each trial drops a user uniformly in the serving cell, fades the
    serving and jammer links independently, and returns the pair
    (legitimate rate, eavesdropper rate). The eavesdropper side is
    deterministic: all its links are air-ground free-space.
    """
    serving, ranked, center, _, terrestrial, g_eve_serving, g_eve_jam = _exp_b_geometry(config)
    jammers = ranked[:n_jammers]
    jx = np.array([j.x for j in jammers])
    jy = np.array([j.y for j in jammers])
    bs_h = config.bs_height
    pattern = config.pattern
    i_eve = p_t_watts * float(np.sum(g_eve_jam[:n_jammers]))
    rate_eve = rate(p_t_watts * g_eve_serving / (1.0 + i_eve))

    def sampler(rng: np.random.Generator) -> tuple[float, float]:
        user = drop_user(rng, center, config.cell_radius)
        fades = sample_fade(rng, 1 + n_jammers)
        d_h = math.hypot(user.x - serving.x, user.y - serving.y)
        d_3d = math.hypot(d_h, bs_h)
        elev = math.degrees(math.atan2(-bs_h, d_h))
        g_legit = terrestrial_gain(terrestrial, d_3d, fades[0]) * pattern_gain(pattern, elev)
        if n_jammers:
            d_hj = np.hypot(jx - user.x, jy - user.y)
            d_3dj = np.hypot(d_hj, bs_h)
            elev_j = np.degrees(np.arctan2(-bs_h, d_hj))
            leak = terrestrial_gain(terrestrial, d_3dj, fades[1:]) * pattern_gain(pattern, elev_j)
            interference = p_t_watts * float(np.sum(leak))
        else:
            interference = 0.0
        sinr_user = p_t_watts * g_legit / (1.0 + interference)
        return rate(sinr_user), rate_eve

    return sampler


def run_exp_b(config: ExpBConfig, workers: int = 1) -> SweepTable:
    """Mean secrecy rate versus number of jamming sites, per BS power.

    Jamming sites are activated in jam-to-leak order. Every sweep point
    reuses the same per-trial substreams (common random numbers), so
    curves are directly comparable across sweep points.
    """
    config.validate()
    rows = []
    for p_dbm in config.p_t_sweep_dbm:
        p_w = dbm_to_watts(p_dbm)
        for n in config.n_jammers_sweep:
            sampler = make_exp_b_sampler(config, p_w, int(n))
            stat = ergodic_secrecy(
                sampler, config.trials, config.seed, workers=workers, clamp=config.clamp
            )
            rows.append(
                {
                    "p_t_dbm": float(p_dbm),
                    "n_jammers": int(n),
                    "secrecy_mean_bps_hz": stat.mean_bps_hz,
                    "ci95_bps_hz": stat.half_width_95,
                    "trials": stat.trials,
                    "seed": config.seed,
                }
            )
    return SweepTable(EXP_B_COLUMNS, rows)


def run_beam_demo(config: BeamDemoConfig) -> SweepTable:
    """Transmit-nulling demo versus transmitter altitude.

    For each altitude the transmitter nulls the eavesdropper while
    serving the user. Altitudes where the two channels are inseparable
    (zero elevation separation at equal azimuth) are flagged degenerate
    instead of aborting the sweep; the matched-beam (no nulling)
    secrecy rate is always reported for comparison.
    """
    config.validate()
    geom = UpaGeometry(config.nx, config.ny, config.spacing)
    los = FreeSpaceLoS(config.gamma0)
    p_w = dbm_to_watts(config.p_dbm)
    rows = []
    for alt in config.tx_altitudes:
        tx = Position(0.0, 0.0, float(alt))
        h_user = math.sqrt(los_gain(los, distance(tx, config.user))) * upa_steering(
            geom, elevation_angle(tx, config.user), azimuth_angle(tx, config.user)
        )
        h_eve = math.sqrt(los_gain(los, distance(tx, config.eve))) * upa_steering(
            geom, elevation_angle(tx, config.eve), azimuth_angle(tx, config.eve)
        )
        sep = abs(elevation_angle(tx, config.user) - elevation_angle(tx, config.eve))
        w_mrt = mrt(h_user)
        secrecy_mrt = secrecy_rate(
            rate(p_w * beam_power_gain(w_mrt, h_user)), rate(p_w * beam_power_gain(w_mrt, h_eve))
        )
        row = {
            "altitude_m": float(alt),
            "elev_sep_deg": sep,
            "secrecy_mrt_bps_hz": secrecy_mrt,
        }
        try:
            w = zf_null(h_user, [h_eve])
        except DegenerateGeometry:
            row.update(user_gain_fraction=None, secrecy_zf_bps_hz=None, degenerate=True)
        else:
            gain_user = beam_power_gain(w, h_user)
            row.update(
                user_gain_fraction=gain_user / float(np.linalg.norm(h_user) ** 2),
                secrecy_zf_bps_hz=secrecy_rate(
                    rate(p_w * gain_user), rate(p_w * beam_power_gain(w, h_eve))
                ),
                degenerate=False,
            )
        rows.append(row)
    return SweepTable(BEAM_DEMO_COLUMNS, rows)
