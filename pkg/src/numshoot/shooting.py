"""Two-sided shooting at a fixed trial energy.

Both branches start from near-zero boundary seeds, meet at the classical
turning point, and the left branch is rescaled so the assembled candidate is
continuous there. The remaining defect, the difference of one-sided central
derivatives at the match point, is the mismatch functional f(E) whose zeros
are the eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, UnscalableTrialError
from .grid import Grid, find_match_point
from .kernel import propagate
from .potentials import PotentialModel, evaluate


@dataclass(frozen=True, eq=False)
class ShootingOutcome:
    """Result of one two-sided shot.

    ``psi`` holds the rescaled left branch below ``match_index`` and the
    right branch from ``match_index`` on (the stored match value is the
    right branch's). ``psi[0]`` and ``psi[-1]`` are the boundary seeds,
    exactly zero. When ``diverged`` is set the propagation overflowed and
    ``mismatch`` is NaN; scans treat such energies as missing points.
    """

    psi: np.ndarray
    match_index: int
    psi_match: float
    mismatch: float
    diverged: bool = False


def shoot(grid: Grid, potential: PotentialModel, energy: float, config,
          v_samples: np.ndarray | None = None) -> ShootingOutcome:
    """Propagate from both boundaries and evaluate the derivative mismatch.

    Steps: locate the match point; march up from (0, delta_left) to one past
    it and down from (0, delta_right) to one before it; multiply the left
    branch by scale = psi_right(match) / psi_left(match); form

        f = [(psi_l[m+1] - psi_l[m-1]) - (psi_r[m+1] - psi_r[m-1])] / (2h)

    on the rescaled left branch; assemble the candidate from the left branch
    below the match and the right branch from it onward.

    Raises
    ------
    UnscalableTrialError
        If the left branch vanishes at the match point; the caller should
        perturb the energy and retry.
    NoTurningPointError, TurningPointAtBoundaryError
        Propagated from the match-point search.
    """
    vv = v_samples if v_samples is not None else evaluate(potential, grid.points())
    match = find_match_point(potential, energy, grid, v_samples=vv)
    try:
        left = propagate("leftward_from_a", grid, energy, potential,
                         0.0, config.delta_left, match, config.kernel,
                         v_samples=vv)
        right = propagate("rightward_from_b", grid, energy, potential,
                          0.0, config.delta_right, match, config.kernel,
                          v_samples=vv)
    except DivergenceError:
        return ShootingOutcome(psi=np.zeros(grid.dim), match_index=match,
                               psi_match=float("nan"), mismatch=float("nan"),
                               diverged=True)

    if left[match] == 0.0:
        raise UnscalableTrialError(
            f"left solution vanishes at match index {match} for E={energy!r}"
        )
    scale = right[match] / left[match]
    left_scaled = left * scale
    d_left = left_scaled[match + 1] - left_scaled[match - 1]
    d_right = right[match + 1] - right[match - 1]
    mismatch = (d_left - d_right) / (2.0 * grid.h)

    psi = np.concatenate((left_scaled[:match], right[match:]))
    psi[0] = 0.0
    psi[-1] = 0.0
    return ShootingOutcome(psi=psi, match_index=match,
                           psi_match=float(right[match]),
                           mismatch=float(mismatch), diverged=False)
