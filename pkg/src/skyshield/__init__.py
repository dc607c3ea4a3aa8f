"""Physical-layer security toolkit for UAV-ground wireless links.

Computes secrecy rates of air-ground links under free-space and
terrestrial fading channel models, optimizes UAV base-station placement,
evaluates cooperative UAV-assisted and remote jamming, and demonstrates
planar-array transmit nulling.
"""

__version__ = "0.1.0"

from .beamforming import UpaGeometry, beam_power_gain, mrt, receive_zf, upa_steering, zf_null
from .channel import (
    BsAntennaPattern,
    FreeSpaceLoS,
    TerrestrialFading,
    db_to_linear,
    dbm_to_watts,
    linear_to_db,
    los_gain,
    pattern_gain,
    sample_fade,
    terrestrial_gain,
)
from .errors import (
    BelowReferenceDistance,
    CoincidentNodes,
    ConfigError,
    DegenerateGeometry,
    DimensionMismatch,
    EmptyGrid,
    NonPositiveFade,
    NonPositiveLinear,
    SkyShieldError,
    VerticalLink,
    ZeroChannel,
)
from .geometry import Position, azimuth_angle, distance, elevation_angle, horizontal_distance
from .placement import SearchGrid, grid_argmax_1d, optimize_uav_bs, rank_jammer_bs
from .scenarios import (
    BeamDemoConfig,
    ExpAConfig,
    ExpBConfig,
    SweepTable,
    drop_user,
    hex_layout,
    run_beam_demo,
    run_exp_a,
    run_exp_b,
)
from .secrecy import LinkBudget, SecrecyStat, ergodic_secrecy, rate, secrecy_rate, sinr
