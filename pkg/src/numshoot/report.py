"""Run orchestration and machine-readable outputs.

A solve run chains spectrum search, normalization, and the independent
cross-checks into one report dictionary with a stable key schema (see
README). Numbers pass through Python's shortest round-trip float repr, both
in the JSON report and in the %.17g-formatted text tables, so parsing a file
back reproduces the in-memory values exactly.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

import numpy as np

from .errors import DomainError
from .grid import Grid, vec_max
from .normalization import (mc_check_probability, normalize_amplitude,
                            normalize_quadrature, simpson_integral)
from .oracle import AnalyticSystem, analytic_energy, oracle_spectrum
from .potentials import PotentialModel, UnitsInfo, evaluate
from .spectrum import Eigenpair, SolverConfig, scan_spectrum

SCHEMA = "numshoot-report/1"

#: Default hit-or-miss sample count for the probability re-check.
MC_SAMPLES = 10000


def analytic_system_for(potential: PotentialModel) -> AnalyticSystem | None:
    """Reference system matching a potential model, if one exists."""
    if potential.kind == "hydrogen_reduced":
        return AnalyticSystem(kind="hydrogen")
    if potential.kind == "morse":
        return AnalyticSystem(kind="morse", de=potential.de, alpha=potential.alpha)
    if potential.kind == "quantum_dot":
        return AnalyticSystem(kind="quantum_dot", omega=potential.omega)
    if potential.kind == "harmonic":
        return AnalyticSystem(kind="harmonic", stiffness=potential.stiffness)
    return None


def analytic_quantum_number(potential: PotentialModel, state_index: int) -> int:
    """Quantum number of the state_index-th found state for the comparison
    column.

    Hydrogen levels start at n=1; morse and harmonic ladders at n=0. The
    quantum-dot preset's scan window starts above the two lowest oscillator
    levels and the dot's states alternate with odd-parity ones, so its
    found-state ladder maps to n = 2*(state_index + 2).
    """
    if potential.kind == "hydrogen_reduced":
        return state_index + 1
    if potential.kind == "quantum_dot":
        return 2 * (state_index + 2)
    return state_index


def run_solve(grid: Grid, potential: PotentialModel, config: SolverConfig,
              preset: str | None = None, seed: int = 12345,
              mc_samples: int = MC_SAMPLES, with_timing: bool = True,
              with_oracle: bool = True) -> dict:
    """Execute scan -> normalize -> cross-check and return the report dict.

    Per-state Monte Carlo re-checks use seed + state index, so a single seed
    reproduces the whole run. ``with_oracle=False`` skips the
    finite-difference referee (used by the scan/potential subcommands).
    """
    t0 = time.perf_counter()
    states = scan_spectrum(grid, potential, config)
    t_solve = time.perf_counter() - t0

    system = analytic_system_for(potential)
    oracle_energies: list[float] = []
    t_oracle = 0.0
    if with_oracle and states:
        t1 = time.perf_counter()
        oracle_energies = oracle_spectrum(potential, grid, len(states))
        t_oracle = time.perf_counter() - t1

    state_rows = []
    prob_functions = []
    for idx, pair in enumerate(states):
        row = _state_row(idx, pair, grid, potential, system, seed, mc_samples,
                         oracle_energies)
        state_rows.append(row[0])
        prob_functions.append(row[1])

    report = {
        "schema": SCHEMA,
        "preset": preset,
        "units": {"rydberg_eV": UnitsInfo().rydberg_eV,
                  "description": UnitsInfo().description},
        "grid": {"a": grid.a, "b": grid.b, "h": grid.h, "dim": grid.dim},
        "potential": _potential_meta(potential),
        "config": {
            "delta_left": config.delta_left, "delta_right": config.delta_right,
            "eps": config.eps, "kmax": config.kmax, "nmax": config.nmax,
            "e_in": config.e_in, "v_max": config.v_max, "dE": config.dE,
            "scan_mode": config.scan_mode, "kernel": config.kernel,
        },
        "seed": seed,
        "mc_samples": mc_samples,
        "requested_states": config.nmax,
        "found_states": len(states),
        "complete": len(states) >= config.nmax,
        "states": state_rows,
        "oracle": {
            "provenance": "oracle",
            "method": "tridiagonal finite difference, Sturm bisection",
            "energies": oracle_energies,
        },
        "analytic": {
            "provenance": "analytic",
            "system": system.kind if system else None,
            "energies": [row["analytic_energy"] for row in state_rows],
        },
    }
    if with_timing:
        report["timing"] = {"solve_s": t_solve, "oracle_s": t_oracle,
                            "total_s": time.perf_counter() - t0}
    # Stashed for exporters; underscore keys never reach the JSON file.
    report["_eigenpairs"] = states
    report["_prob_functions"] = prob_functions
    return report


def _potential_meta(potential: PotentialModel) -> dict:
    meta = {"kind": potential.kind, "ell": potential.ell}
    if potential.kind == "morse":
        meta.update(de=potential.de, alpha=potential.alpha)
    elif potential.kind == "quantum_dot":
        meta.update(omega=potential.omega, exponent=potential.exponent)
    elif potential.kind == "harmonic":
        meta.update(stiffness=potential.stiffness)
    return meta


def _state_row(idx: int, pair: Eigenpair, grid: Grid,
               potential: PotentialModel, system: AnalyticSystem | None,
               seed: int, mc_samples: int, oracle_energies: list[float]):
    amp = normalize_amplitude(pair.psi)
    prob, integral = normalize_quadrature(amp, grid)
    recheck = simpson_integral(prob * prob, grid.h)
    mc = mc_check_probability(prob, grid, mc_samples, seed=seed + idx)

    analytic = None
    if system is not None:
        try:
            analytic = analytic_energy(system, analytic_quantum_number(potential, idx),
                                       ell=potential.ell)
        except DomainError:
            analytic = None  # state beyond the system's closed-form ladder
    oracle_e = oracle_energies[idx] if idx < len(oracle_energies) else None

    row = {
        "index": idx,
        "provenance": "numerov",
        "energy": pair.energy,
        "iterations": pair.iterations,
        "final_mismatch": pair.final_mismatch,
        "node_count": pair.node_count,
        "amplitude_peak": vec_max(pair.psi),
        "quadrature_integral": integral,
        "recheck_integral": recheck,
        "mc": {"integral": mc.integral, "efficiency": mc.efficiency,
               "std_error": mc.std_error, "samples": mc.samples,
               "seed": mc.seed},
        "oracle_energy": oracle_e,
        "analytic_energy": analytic,
        "oracle_abs_dev": abs(pair.energy - oracle_e) if oracle_e is not None else None,
        "analytic_abs_dev": abs(pair.energy - analytic) if analytic is not None else None,
        "analytic_rel_dev": (abs(pair.energy - analytic) / abs(analytic)
                             if analytic not in (None, 0) else None),
    }
    return row, prob


def report_to_json(report: dict) -> str:
    """Serialize, dropping the underscore-prefixed in-memory extras."""
    public = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(public, indent=2, sort_keys=True) + "\n"


def write_report(report: dict, out_dir: str | Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "report.json"
    path.write_text(report_to_json(report))
    return path


def _table(path: Path, header: str, columns) -> Path:
    rows = np.column_stack(columns)
    with path.open("w") as fh:
        fh.write(header if header.endswith("\n") else header + "\n")
        for row in rows:
            fh.write(" ".join(f"{val:.17g}" for val in row) + "\n")
    return path


def write_eigenfunction_tables(report: dict, grid: Grid,
                               out_dir: str | Path) -> list[Path]:
    """Write amplitude- and probability-normalized eigenfunction tables.

    Columns are x then one column per state. The amplitude table has
    max|psi| = 1 in every state column; the probability table integrates
    to 1.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    xs = grid.points()
    pairs = report["_eigenpairs"]
    if not pairs:
        return []
    names = " ".join(f"psi_{i + 1}" for i in range(len(pairs)))
    amp_cols = [normalize_amplitude(p.psi) for p in pairs]
    written = [
        _table(out_dir / "eigenfunctions.dat",
               f"# x {names}\n# amplitude normalization: max |psi| = 1 per column\n"
               "# positions and energies in the run's dimensionless units\n",
               [xs, *amp_cols]),
        _table(out_dir / "eigenfunctions_probability.dat",
               f"# x {names}\n# probability normalization: integral of psi^2 dx = 1\n",
               [xs, *report["_prob_functions"]]),
    ]
    return written


def write_potential_table(grid: Grid, potential: PotentialModel,
                          out_dir: str | Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    xs = grid.points()
    return _table(out_dir / "potential.dat",
                  "# x V(x)\n", [xs, evaluate(potential, xs)])


def write_scan_table(rows, out_dir: str | Path) -> Path:
    """Write the f(E) scan: columns E, f, status (ok or the skip reason)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "scan.dat"
    with path.open("w") as fh:
        fh.write("# E f status\n")
        for energy, f, status in rows:
            f_txt = f"{f:.17g}" if f is not None else "nan"
            fh.write(f"{energy:.17g} {f_txt} {status}\n")
    return path


def write_compare_table(report: dict, out_dir: str | Path) -> Path:
    """Joint energy table: solver, finite-difference referee, closed form."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "compare.dat"
    with path.open("w") as fh:
        fh.write("# state E_numerov E_oracle E_analytic dev_oracle dev_analytic\n")
        for row in report["states"]:
            cells = [f"{row['index']}"]
            for key in ("energy", "oracle_energy", "analytic_energy",
                        "oracle_abs_dev", "analytic_abs_dev"):
                val = row[key]
                cells.append("nan" if val is None else f"{val:.17g}")
            fh.write(" ".join(cells) + "\n")
    return path
