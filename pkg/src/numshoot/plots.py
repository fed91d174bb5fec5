"""Figure rendering for run reports.

Figures are static files written next to the data tables, one SVG per run,
sized for quick inspection rather than publication.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .grid import Grid  # noqa: E402
from .potentials import PotentialModel, evaluate  # noqa: E402


def render_solve_figure(report: dict, grid: Grid, potential: PotentialModel,
                        out_dir: str | Path) -> Path:
    """One SVG with the potential curve and the normalized eigenfunctions."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    xs = grid.points()
    vv = evaluate(potential, xs)
    energies = [row["energy"] for row in report["states"]]

    fig, (ax_v, ax_psi) = plt.subplots(2, 1, figsize=(8, 9), sharex=True)
    ax_v.plot(xs, vv, "k-", linewidth=1.5, label="V(x)")
    for energy in energies:
        ax_v.axhline(energy, linestyle="--", linewidth=0.8)
    if energies:
        span = max(energies) - min(energies) or abs(energies[0]) or 1.0
        ax_v.set_ylim(min(min(energies) - 0.5 * span, float(np.min(vv))),
                      max(energies) + 0.5 * span)
    ax_v.set_ylabel("effective potential")
    ax_v.grid(True)
    ax_v.legend(frameon=False)

    for idx, psi in enumerate(report["_prob_functions"]):
        ax_psi.plot(xs, psi, linewidth=1.0, label=f"state {idx}")
    ax_psi.set_xlabel("x")
    ax_psi.set_ylabel("normalized eigenfunctions")
    ax_psi.grid(True)
    if report["_prob_functions"]:
        ax_psi.legend(frameon=False)

    path = out_dir / "figure.svg"
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def render_scan_figure(rows, out_dir: str | Path) -> Path:
    """Mismatch f(E) over the scan window, symlog-scaled (f spans many
    decades and flips sign at roots and poles)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    valid = [(e, f) for e, f, status in rows if status == "ok"]
    fig, ax = plt.subplots(figsize=(8, 5))
    if valid:
        es, fs = zip(*valid)
        ax.plot(es, fs, ".-", markersize=3, linewidth=0.7)
        ax.set_yscale("symlog")
    ax.axhline(0.0, color="k", linewidth=0.8)
    ax.set_xlabel("E")
    ax.set_ylabel("derivative mismatch f(E)")
    ax.grid(True)
    path = out_dir / "scan.svg"
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def render_potential_figure(grid: Grid, potential: PotentialModel,
                            out_dir: str | Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    xs = grid.points()
    vv = evaluate(potential, xs)
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(xs, vv, "k-", linewidth=1.5)
    finite = vv[np.isfinite(vv)]
    lo, hi = np.percentile(finite, [0.5, 99.5])
    pad = 0.1 * (hi - lo or 1.0)
    ax.set_ylim(lo - pad, hi + pad)
    ax.set_xlabel("x")
    ax.set_ylabel("effective potential")
    ax.grid(True)
    path = out_dir / "potential.svg"
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path
