"""Uniform planar array steering vectors and MRT/ZF precoders.

Channel vectors follow the transmit convention: a receiver with channel
h sees the complex amplitude sum_i h_i w_i under precoder w, so the
matched (MRT) precoder is conj(h)/||h|| and nulling a channel means
choosing w orthogonal (in the Hermitian sense) to conj(h).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGeometry, DimensionMismatch, ZeroChannel

# relative residual below which the desired channel counts as inside the null span
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class UpaGeometry:
    """Planar array in the xy plane: nx-by-ny elements, spacing in wavelengths."""

    nx: int = 4
    ny: int = 4
    spacing: float = 0.5

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ValueError(f"element counts must be >= 1, got {self.nx}x{self.ny}")
        if not self.spacing > 0.0:
            raise ValueError(f"spacing must be > 0, got {self.spacing}")

    @property
    def size(self) -> int:
        return self.nx * self.ny


def upa_steering(geom: UpaGeometry, elevation_deg: float, azimuth_deg: float) -> np.ndarray:
    """Unit-modulus steering vector toward (elevation, azimuth), length nx*ny.

    Entry (m, n) is exp(j*2*pi*spacing*(m*u + n*v)) with direction
    cosines u = cos(el)*cos(az) and v = cos(el)*sin(az); entries are
    flattened m-major.
    """
    el = math.radians(elevation_deg)
    az = math.radians(azimuth_deg)
    u = math.cos(el) * math.cos(az)
    v = math.cos(el) * math.sin(az)
    m = np.arange(geom.nx)[:, None]
    n = np.arange(geom.ny)[None, :]
    phase = 2.0 * np.pi * geom.spacing * (m * u + n * v)
    return np.exp(1j * phase).ravel()


def _as_cvec(h) -> np.ndarray:
    h = np.asarray(h, dtype=complex)
    if h.ndim != 1 or h.size < 1:
        raise DimensionMismatch(f"expected a 1-D complex vector, got shape {h.shape}")
    return h


def mrt(h) -> np.ndarray:
    """Matched unit-norm precoder conj(h)/||h|| (maximum ratio transmission)."""
    h = _as_cvec(h)
    nrm = np.linalg.norm(h)
    if nrm == 0.0:
        raise ZeroChannel("cannot match a zero channel vector")
    return np.conj(h) / nrm


def beam_power_gain(w, h) -> float:
    """Received power gain |sum_i h_i w_i|^2 of channel h under precoder w."""
    w = _as_cvec(w)
    h = _as_cvec(h)
    if w.shape != h.shape:
        raise DimensionMismatch(f"length mismatch: {h.shape} vs {w.shape}")
    return float(abs(np.dot(h, w)) ** 2)


def zf_null(h_user, h_eves) -> np.ndarray:
    """Unit-norm precoder that nulls every eavesdropper channel.

    Projects conj(h_user) onto the orthogonal complement of
    span{conj(h_e)}; among all unit vectors meeting the null constraints
    this maximizes the user's beam gain. Raises DegenerateGeometry when
    the user channel lies (numerically) inside the eavesdropper span.
    """
    hu = _as_cvec(h_user)
    nrm_u = np.linalg.norm(hu)
    if nrm_u == 0.0:
        raise ZeroChannel("cannot beamform toward a zero channel vector")
    target = np.conj(hu)
    eves = [_as_cvec(e) for e in h_eves]
    for e in eves:
        if e.shape != hu.shape:
            raise DimensionMismatch(f"length mismatch: {hu.shape} vs {e.shape}")
    if eves:
        span = np.column_stack([np.conj(e) for e in eves])
        basis, s, _ = np.linalg.svd(span, full_matrices=False)
        keep = s > s[0] * max(span.shape) * np.finfo(float).eps if s[0] > 0 else s > 0
        basis = basis[:, keep]
        target = target - basis @ (basis.conj().T @ target)
    residual = np.linalg.norm(target)
    if residual < DEGENERACY_TOL * nrm_u:
        raise DegenerateGeometry(
            "user channel is not separable from the channels to be nulled"
        )
    return target / residual


def receive_zf(h_signal, h_jammers) -> np.ndarray:
    """Unit-norm receive combiner that cancels the jammer channels.

    Same mathematics as zf_null with roles renamed: the combiner nulls
    every jammer while maximizing the desired signal's gain.
    """
    return zf_null(h_signal, h_jammers)
