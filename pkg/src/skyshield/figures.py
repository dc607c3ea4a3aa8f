"""Render sweep tables to figure files.

Companion to the CSV output: each experiment's table maps onto one
matplotlib figure, written wherever the caller points it (PNG/PDF/SVG
per the file extension).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .scenarios import SweepTable

_MARKERS = ("o", "s", "^", "v", "D", "x", "+", "*")


def plot_exp_a(table: SweepTable):
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    schemes = []
    for row in table.rows:
        if row["scheme"] not in schemes:
            schemes.append(row["scheme"])
    for k, scheme in enumerate(schemes):
        pts = [(r["p_u_dbm"], r["secrecy_bps_hz"]) for r in table.rows if r["scheme"] == scheme]
        ax.plot(
            [p for p, _ in pts],
            [v for _, v in pts],
            marker=_MARKERS[k % len(_MARKERS)],
            markersize=4,
            label=scheme.replace("_", " "),
        )
    ax.set_xlabel("UAV-BS transmit power (dBm)")
    ax.set_ylabel("Secrecy rate (bps/Hz)")
    ax.grid(True, alpha=0.4)
    ax.legend()
    fig.tight_layout()
    return fig


def plot_exp_b(table: SweepTable):
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    powers = []
    for row in table.rows:
        if row["p_t_dbm"] not in powers:
            powers.append(row["p_t_dbm"])
    for k, p in enumerate(powers):
        pts = [r for r in table.rows if r["p_t_dbm"] == p]
        ax.errorbar(
            [r["n_jammers"] for r in pts],
            [r["secrecy_mean_bps_hz"] for r in pts],
            yerr=[r["ci95_bps_hz"] for r in pts],
            marker=_MARKERS[k % len(_MARKERS)],
            markersize=4,
            capsize=2,
            label=f"$P_T$ = {p:g} dBm",
        )
    ax.set_xlabel("Number of cooperative jamming BSs")
    ax.set_ylabel("Secrecy rate (bps/Hz)")
    ax.grid(True, alpha=0.4)
    ax.legend()
    fig.tight_layout()
    return fig


def plot_beam_demo(table: SweepTable):
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.5, 4.0))
    ok = [r for r in table.rows if not r["degenerate"]]
    alts = [r["altitude_m"] for r in ok]
    ax1.plot(alts, [r["user_gain_fraction"] for r in ok], marker="o", markersize=4)
    ax1.set_xlabel("Transmitter altitude (m)")
    ax1.set_ylabel("Post-nulling user gain fraction")
    ax1.set_ylim(-0.05, 1.05)
    ax1.grid(True, alpha=0.4)
    ax2.plot(alts, [r["secrecy_zf_bps_hz"] for r in ok], marker="o", markersize=4, label="with nulling")
    ax2.plot(
        [r["altitude_m"] for r in table.rows],
        [r["secrecy_mrt_bps_hz"] for r in table.rows],
        marker="s",
        markersize=4,
        label="matched beam",
    )
    ax2.set_xlabel("Transmitter altitude (m)")
    ax2.set_ylabel("Secrecy rate (bps/Hz)")
    ax2.grid(True, alpha=0.4)
    ax2.legend()
    fig.tight_layout()
    return fig


PLOTTERS = {"exp-a": plot_exp_a, "exp-b": plot_exp_b, "beam-demo": plot_beam_demo}


def render(command: str, table: SweepTable, path: str, dpi: int = 150) -> None:
    """Plot `table` for the given experiment and write it to `path`."""
    fig = PLOTTERS[command](table)
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
