"""SINR, Shannon rate and (ergodic) secrecy rate.

The secrecy rate is the positive-part difference between the legitimate
and eavesdropper link rates. Ergodic averaging runs one independent
random trial per substream; substreams are keyed by (seed, trial index)
so results are bit-identical regardless of how trials are distributed
over workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

CLAMP_MODES = ("per_trial", "after_mean")


@dataclass(frozen=True)
class LinkBudget:
    """Desired (power W, gain/W) plus interferers; noise is normalized to 1."""

    desired: tuple[float, float]
    interferers: tuple[tuple[float, float], ...] = field(default=())

    def __post_init__(self):
        pairs = (self.desired, *self.interferers)
        for p, g in pairs:
            if p < 0.0 or g < 0.0:
                raise ValueError(f"powers and gains must be >= 0, got ({p}, {g})")


@dataclass(frozen=True)
class SecrecyStat:
    mean_bps_hz: float
    half_width_95: float
    trials: int


def sinr(budget: LinkBudget) -> float:
    """(P_d * g_d) / (1 + sum_i P_i * g_i)."""
    p, g = budget.desired
    interference = sum(pi * gi for pi, gi in budget.interferers)
    return p * g / (1.0 + interference)


def rate(sinr_linear: float) -> float:
    """Shannon rate log2(1 + SINR) in bits/s/Hz."""
    if sinr_linear < 0.0:
        raise ValueError(f"SINR must be >= 0, got {sinr_linear}")
    return math.log2(1.0 + sinr_linear)


def secrecy_rate(rate_legit: float, rate_eve: float) -> float:
    """Positive-part rate difference max(0, R_legit - R_eve) in bits/s/Hz."""
    return max(0.0, rate_legit - rate_eve)


@lru_cache(maxsize=8)
def trial_streams(seed: int, trials: int) -> tuple[np.random.SeedSequence, ...]:
    """Independent per-trial substreams keyed by (seed, trial index).

    Cached: sweep points sharing (seed, trials) reuse the same
    substreams, which both saves the spawn cost and gives common random
    numbers across sweep points.
    """
    return tuple(np.random.SeedSequence(seed).spawn(trials))


def ergodic_secrecy(
    sampler: Callable[[np.random.Generator], tuple[float, float]],
    trials: int,
    seed: int,
    workers: int = 1,
    clamp: str = "per_trial",
) -> SecrecyStat:
    """Monte-Carlo mean secrecy rate with a 95% confidence half-width.

    `sampler` draws one (rate_legit, rate_eve) pair from the generator it
    is handed; trial i always sees the substream keyed by (seed, i), so
    the result does not depend on `workers`. `clamp` selects whether the
    positive part is taken per trial (default) or after averaging the
    rate difference.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if clamp not in CLAMP_MODES:
        raise ValueError(f"clamp must be one of {CLAMP_MODES}, got {clamp!r}")
    children = trial_streams(seed, trials)
    diff = np.empty(trials)

    def run_range(lo: int, hi: int) -> None:
        for i in range(lo, hi):
            rng = np.random.default_rng(children[i])
            rate_legit, rate_eve = sampler(rng)
            diff[i] = rate_legit - rate_eve

    if workers <= 1 or trials < 2 * workers:
        run_range(0, trials)
    else:
        chunk = -(-trials // workers)
        bounds = [(lo, min(lo + chunk, trials)) for lo in range(0, trials, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for fut in [pool.submit(run_range, lo, hi) for lo, hi in bounds]:
                fut.result()

    if clamp == "per_trial":
        values = np.maximum(diff, 0.0)
        mean = float(np.mean(values))
        std = float(np.std(values, ddof=1)) if trials > 1 else 0.0
    else:
        mean = max(0.0, float(np.mean(diff)))
        std = float(np.std(diff, ddof=1)) if trials > 1 else 0.0
    half_width = 1.96 * std / math.sqrt(trials)
    return SecrecyStat(mean_bps_hz=mean, half_width_95=half_width, trials=trials)
