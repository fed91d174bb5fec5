"""Bundled problem presets and flat key=value config files.

Each preset fixes the grid, the potential, the seed amplitudes and the scan
window in one place, mirroring the variable names a, b, h, delta, eps, kmax,
nmax, Ein, Vmax, dE that the config-file format uses, so a run can always be
reproduced from a ten-line text file.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DomainError
from .grid import Grid, build_grid
from .potentials import (PotentialModel, harmonic_potential, hydrogen_potential,
                         morse_potential, quantum_dot_potential)
from .spectrum import PaperSchedule, SolverConfig

PRESET_NAMES = ("hydrogen", "morse", "qdot", "harmonic-test")

#: Fixed energy-increment recipes replayed by --mode paper-steps.
PAPER_SCHEDULES = {
    "hydrogen": PaperSchedule(
        within=24.0,
        between=(("advance", 126.0), ("advance", 3.0), ("from_old", 6.0)),
    ),
    "morse": PaperSchedule(
        within=7.2,
        between=(("advance", 70.0), ("advance", 0.1), ("from_old", 50.0)),
    ),
    "qdot": PaperSchedule(
        within=1.0 / 25.0,
        between=(("advance", 6.0), ("advance", 6.0), ("from_old", 6.5),
                 ("from_old", 6.5), ("from_old", 4.0)),
    ),
}


def load_preset(name: str, qdot_exponent: int = 2,
                ) -> tuple[Grid, PotentialModel, SolverConfig]:
    """Build grid, potential and solver config for a named preset.

    ``qdot_exponent`` selects the quantum-dot confinement form: 2 (default,
    quadratic, confines all five target states) or 1 (literal linear form).

    Raises
    ------
    DomainError
        For an unknown preset name.
    """
    if name == "hydrogen":
        grid = build_grid(0.001, 60.001, 0.01)
        potential = hydrogen_potential(ell=0)
        delta = 0.02
        config = SolverConfig(delta_left=delta, delta_right=2 * delta,
                              eps=1e-4, kmax=300, nmax=3,
                              e_in=-1.6, v_max=0.0, dE=delta / 4,
                              paper_step_multipliers=PAPER_SCHEDULES["hydrogen"])
    elif name == "morse":
        grid = build_grid(-1.01, 5.01, 0.006)
        potential = morse_potential(de=16.0, alpha=2.0)
        delta = 0.01
        config = SolverConfig(delta_left=delta, delta_right=2 * delta,
                              eps=1e-5, kmax=100, nmax=2,
                              e_in=0.0, v_max=16.0, dE=delta,
                              paper_step_multipliers=PAPER_SCHEDULES["morse"])
    elif name == "qdot":
        grid = build_grid(0.001, 60.001, 0.02)
        potential = quantum_dot_potential(omega=0.01, exponent=qdot_exponent)
        delta = 0.01
        config = SolverConfig(delta_left=delta, delta_right=2 * delta,
                              eps=1e-5, kmax=100, nmax=5,
                              e_in=0.086857, v_max=2.0, dE=delta / 2.8,
                              paper_step_multipliers=PAPER_SCHEDULES["qdot"])
    elif name == "harmonic-test":
        grid = build_grid(-7.0, 7.0042, 0.007)
        potential = harmonic_potential(stiffness=1.0)
        delta = 0.01
        config = SolverConfig(delta_left=delta, delta_right=2 * delta,
                              eps=1e-6, kmax=120, nmax=4,
                              e_in=0.2, v_max=9.0, dE=0.05)
    else:
        raise DomainError(
            f"unknown preset {name!r}; choose one of {', '.join(PRESET_NAMES)}"
        )
    return grid, potential, config


_CONFIG_KEYS = {"a", "b", "h", "delta", "delta_left", "delta_right", "eps",
                "kmax", "nmax", "Ein", "Vmax", "dE", "potential", "ell",
                "De", "alpha", "omega", "exponent", "stiffness", "table"}


def parse_config_file(path: str | Path,
                      ) -> tuple[Grid, PotentialModel, SolverConfig]:
    """Read a flat key=value config.

    Required keys: a, b, h, delta, eps, kmax, nmax, Ein, Vmax, dE, potential.
    The potential key names a model (hydrogen, morse, qdot, harmonic,
    tabulated) with optional parameter keys (ell, De, alpha, omega, exponent,
    stiffness, table=<file>). delta_left/delta_right override the default
    seed pair (delta, 2*delta). '#' starts a comment; blank lines are
    ignored.
    """
    path = Path(path)
    raw: dict[str, str] = {}
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise DomainError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in text.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
        raw[key] = value

    missing = [k for k in ("a", "b", "h", "delta", "eps", "kmax", "nmax",
                           "Ein", "Vmax", "dE", "potential") if k not in raw]
    if missing:
        raise DomainError(f"{path}: missing config keys: {', '.join(missing)}")

    grid = build_grid(float(raw["a"]), float(raw["b"]), float(raw["h"]))
    potential = _potential_from_config(raw, path)
    delta = float(raw["delta"])
    config = SolverConfig(
        delta_left=float(raw.get("delta_left", delta)),
        delta_right=float(raw.get("delta_right", 2 * delta)),
        eps=float(raw["eps"]),
        kmax=int(raw["kmax"]),
        nmax=int(raw["nmax"]),
        e_in=float(raw["Ein"]),
        v_max=float(raw["Vmax"]),
        dE=float(raw["dE"]),
    )
    return grid, potential, config


def _potential_from_config(raw: dict[str, str], path: Path) -> PotentialModel:
    from .potentials import load_tabulated

    kind = raw["potential"]
    ell = int(raw.get("ell", 0))
    if kind == "hydrogen":
        return hydrogen_potential(ell=ell)
    if kind == "morse":
        return morse_potential(de=float(raw.get("De", 16.0)),
                               alpha=float(raw.get("alpha", 2.0)), ell=ell)
    if kind == "qdot":
        return quantum_dot_potential(omega=float(raw.get("omega", 0.01)),
                                     exponent=int(raw.get("exponent", 2)),
                                     ell=ell)
    if kind == "harmonic":
        return harmonic_potential(stiffness=float(raw.get("stiffness", 1.0)),
                                  ell=ell)
    if kind == "tabulated":
        if "table" not in raw:
            raise DomainError(f"{path}: tabulated potential needs table=<file>")
        table = Path(raw["table"])
        if not table.is_absolute():
            table = path.parent / table
        return load_tabulated(table, ell=ell)
    raise DomainError(f"{path}: unknown potential {kind!r}")
