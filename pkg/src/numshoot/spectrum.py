"""Eigenvalue search: coarse scan, secant refinement, spectrum assembly.

Two scan modes exist. ``auto_bracket`` walks the energy window in fixed
steps, brackets sign changes of the mismatch f(E), and refines each bracket
with secant iteration; it is the default because it needs no per-problem
tuning. ``paper_steps`` instead replays a fixed increment schedule between
trial energies and accepts the current trial as soon as the secant-style
update falls below tolerance; it reproduces the preset recipes this package
ships but offers no guarantees on other potentials.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (ConvergenceError, DegenerateFunctionError, DomainError,
                     NoTurningPointError, PartialSpectrumWarning,
                     StalledSecantError, TurningPointAtBoundaryError,
                     UnscalableTrialError)
from .grid import Grid
from .potentials import PotentialModel, evaluate
from .shooting import shoot


@dataclass(frozen=True)
class PaperSchedule:
    """Fixed increment recipe for ``paper_steps`` mode.

    ``within`` multiplies the coarse step dE between consecutive trials of
    one state. ``between`` gives one move per completed state: ("advance",
    m) bumps the current energy by m*dE, ("from_old", m) restarts from the
    previous trial energy plus m*dE.
    """

    within: float
    between: tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class SolverConfig:
    """Seeds, tolerances and scan window for one solver run."""

    delta_left: float = 0.02
    delta_right: float = 0.04
    eps: float = 1e-4
    kmax: int = 300
    nmax: int = 3
    e_in: float = -1.6
    v_max: float = 0.0
    dE: float = 0.005
    scan_mode: str = "auto_bracket"
    paper_step_multipliers: PaperSchedule | None = None
    kernel: str = "standard"

    def __post_init__(self):
        if self.eps <= 0:
            raise DomainError(f"eps must be positive, got {self.eps!r}")
        if self.kmax < 2:
            raise DomainError(f"kmax must be >= 2, got {self.kmax}")
        if self.nmax < 1:
            raise DomainError(f"nmax must be >= 1, got {self.nmax}")
        if not self.e_in < self.v_max:
            raise DomainError(
                f"scan window needs e_in < v_max, got {self.e_in!r} >= {self.v_max!r}"
            )
        if self.dE <= 0:
            raise DomainError(f"dE must be positive, got {self.dE!r}")
        if self.scan_mode not in ("auto_bracket", "paper_steps"):
            raise DomainError(f"unknown scan mode {self.scan_mode!r}")


@dataclass(frozen=True, eq=False)
class Eigenpair:
    """One converged state: energy, candidate eigenfunction (normalized
    later), interior node count, number of shots spent, and the mismatch at
    the accepted energy."""

    energy: float
    psi: np.ndarray
    node_count: int
    iterations: int
    final_mismatch: float


def secant_update(energy: float, energy_old: float, f: float, f_old: float) -> float:
    """Secant step toward a root of f: dE = -f (E - E_old) / (f - f_old).

    Raises
    ------
    StalledSecantError
        When f == f_old, which leaves the step undefined; callers perturb
        the energy and retry.
    """
    if f == f_old:
        raise StalledSecantError(
            f"mismatch unchanged between E={energy_old!r} and E={energy!r}"
        )
    return -f * (energy - energy_old) / (f - f_old)


def count_nodes(psi) -> int:
    """Number of strict sign changes between consecutive nonzero interior
    samples; boundary entries are excluded.

    Raises
    ------
    DomainError
        On fewer than 3 samples.
    DegenerateFunctionError
        If the interior is identically zero.
    """
    arr = np.asarray(psi, dtype=float)
    if arr.size < 3:
        raise DomainError(f"need at least 3 samples to count nodes, got {arr.size}")
    interior = arr[1:-1]
    nonzero = interior[interior != 0.0]
    if nonzero.size == 0:
        raise DegenerateFunctionError("cannot count nodes of an all-zero function")
    signs = np.sign(nonzero)
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def refine_eigenvalue(e_seed: float, grid: Grid, potential: PotentialModel,
                      config: SolverConfig, start_offset: float | None = None,
                      v_samples: np.ndarray | None = None) -> Eigenpair:
    """Secant-iterate the mismatch to a root starting from e_seed.

    The two secant starters are (e_seed, e_seed + start_offset); the offset
    defaults to config.dE. Iteration stops when the proposed update drops
    below config.eps; the update is applied once more before the final shot,
    so the reported energy carries it. Trials where the left branch cannot
    be rescaled, or where propagation diverges, are retried with the energy
    perturbed by dE/10, up to 5 times, before the failure surfaces.

    Raises
    ------
    ConvergenceError
        If kmax shots pass without the update falling below eps; carries the
        best |update| seen.
    """
    if not (config.e_in < e_seed < config.v_max):
        raise DomainError(
            f"refinement seed {e_seed!r} outside scan window "
            f"({config.e_in!r}, {config.v_max!r})"
        )
    if v_samples is None:
        v_samples = evaluate(potential, grid.points())
    offset = config.dE if start_offset is None else start_offset
    shots = 0

    def try_shoot(energy):
        # Perturb past unscalable/diverged trials; surface after 5 attempts.
        nonlocal shots
        last_exc = None
        for attempt in range(6):
            e_try = energy + attempt * config.dE / 10.0
            try:
                out = shoot(grid, potential, e_try, config, v_samples=v_samples)
            except UnscalableTrialError as exc:
                last_exc = exc
                continue
            shots += 1
            if out.diverged:
                last_exc = ConvergenceError(f"divergent trial at E={e_try!r}")
                continue
            return e_try, out
        raise last_exc

    e_prev, out_prev = try_shoot(e_seed)
    e_cur, out_cur = try_shoot(e_seed + offset)
    f_prev, f_cur = out_prev.mismatch, out_cur.mismatch
    best = float("inf")

    for _ in range(config.kmax):
        try:
            delta = secant_update(e_cur, e_prev, f_cur, f_prev)
        except StalledSecantError:
            # Nudge one trial and keep going rather than dying on a plateau.
            e_cur, out_cur = try_shoot(e_cur + config.dE / 10.0)
            f_cur = out_cur.mismatch
            continue
        best = min(best, abs(delta))
        if abs(delta) < config.eps:
            e_final = e_cur + delta
            e_final, out = try_shoot(e_final)
            return Eigenpair(energy=float(e_final), psi=out.psi,
                             node_count=count_nodes(out.psi),
                             iterations=shots,
                             final_mismatch=out.mismatch)
        e_prev, f_prev = e_cur, f_cur
        e_cur, out_cur = try_shoot(e_cur + delta)
        f_cur = out_cur.mismatch

    raise ConvergenceError(
        f"no convergence within kmax={config.kmax} shots from seed {e_seed!r} "
        f"(best |dE| = {best:.3e})", best_delta=best)


def scan_spectrum(grid: Grid, potential: PotentialModel,
                  config: SolverConfig) -> list[Eigenpair]:
    """Find the lowest nmax states in (e_in, v_max).

    In ``auto_bracket`` mode the window is walked in steps of dE; energies
    where the shot diverges or has no turning point are skipped as missing
    points, sign changes of f between consecutive valid points are refined
    from the bracket midpoint (second secant starter at midpoint + dE/10),
    and a refined root is accepted only if its |f| is not larger than at
    both bracket ends, which rejects the sign flips f has at its poles.
    Roots closer than eps are deduplicated toward the lower energy.

    In ``paper_steps`` mode the configured :class:`PaperSchedule` is
    replayed verbatim.

    Emits :class:`PartialSpectrumWarning` and returns what was found when
    fewer than nmax states exist below v_max.
    """
    if config.scan_mode == "paper_steps":
        states = _paper_steps_scan(grid, potential, config)
    else:
        states = _auto_bracket_scan(grid, potential, config)
    if len(states) < config.nmax:
        warnings.warn(
            f"found {len(states)} of {config.nmax} requested states below "
            f"v_max={config.v_max!r}", PartialSpectrumWarning, stacklevel=2)
    return states


def _auto_bracket_scan(grid, potential, config):
    vv = evaluate(potential, grid.points())
    roots: list[Eigenpair] = []
    prev: tuple[float, float] | None = None
    # Index arithmetic, like grid points, so scan energies carry no
    # accumulated rounding.
    n_steps = int((config.v_max - config.e_in) / config.dE) + 1
    for j in range(n_steps):
        energy = config.e_in + j * config.dE
        if energy > config.v_max:
            break
        try:
            out = shoot(grid, potential, energy, config, v_samples=vv)
            f = out.mismatch if not out.diverged else None
        except (NoTurningPointError, TurningPointAtBoundaryError,
                UnscalableTrialError):
            f = None
        if f is None:
            prev = None
            continue
        if prev is not None and prev[1] * f < 0.0:
            e_lo, f_lo = prev
            mid = 0.5 * (e_lo + energy)
            try:
                pair = refine_eigenvalue(mid, grid, potential, config,
                                         start_offset=config.dE / 10.0,
                                         v_samples=vv)
            except (ConvergenceError, UnscalableTrialError, NoTurningPointError,
                    TurningPointAtBoundaryError, DomainError):
                pair = None
            if pair is not None and config.e_in < pair.energy < config.v_max \
                    and abs(pair.final_mismatch) <= min(abs(f_lo), abs(f)):
                roots.append(pair)
        prev = (energy, f)

    roots.sort(key=lambda p: p.energy)
    deduped: list[Eigenpair] = []
    for pair in roots:
        if deduped and abs(pair.energy - deduped[-1].energy) <= config.eps:
            continue  # keep the lower-energy representative
        deduped.append(pair)
    return deduped[: config.nmax]


def _paper_steps_scan(grid, potential, config):
    sched = config.paper_step_multipliers
    if sched is None:
        raise DomainError("paper_steps mode needs a PaperSchedule in the config")
    vv = evaluate(potential, grid.points())
    dE = config.dE
    e_old = config.e_in
    energy = config.e_in + dE
    states: list[Eigenpair] = []

    for m in range(config.nmax):
        f_old = 0.0
        converged = False
        for k in range(config.kmax):
            try:
                out = shoot(grid, potential, energy, config, v_samples=vv)
            except UnscalableTrialError:
                continue  # source recipe retries the same energy
            except (NoTurningPointError, TurningPointAtBoundaryError):
                e_old = energy
                energy += sched.within * dE
                continue
            if out.diverged or out.mismatch == f_old:
                # Missing or stalled point: keep marching.
                if not out.diverged:
                    f_old = out.mismatch
                e_old = energy
                energy += sched.within * dE
                continue
            f = out.mismatch
            delta = -f * (energy - e_old) / (f - f_old)
            if abs(delta) < config.eps:
                states.append(Eigenpair(energy=float(energy), psi=out.psi,
                                        node_count=count_nodes(out.psi),
                                        iterations=k + 1,
                                        final_mismatch=f))
                converged = True
                break
            f_old, e_old = f, energy
            energy += sched.within * dE
        if not converged:
            break
        if m < len(sched.between):
            kind, mult = sched.between[m]
            if kind == "advance":
                energy = energy + mult * dE
            else:  # from_old
                energy = e_old + mult * dE
    return states
