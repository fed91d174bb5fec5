"""Uniform grids, array helpers, and classical turning-point location."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoTurningPointError, TurningPointAtBoundaryError


@dataclass(frozen=True)
class Grid:
    """Uniform one-dimensional grid on [a, b].

    Points are generated by index arithmetic, point(i) = a + i*h, never by
    repeated addition, so there is no accumulated rounding drift over long
    grids. ``dim = floor((b - a) / h)`` points are kept; the last point is
    the largest a + i*h that fits below (or at) b.
    """

    a: float
    b: float
    h: float
    dim: int

    def point(self, i: int) -> float:
        return self.a + i * self.h

    def points(self) -> np.ndarray:
        """All grid points as an array."""
        return self.a + self.h * np.arange(self.dim)


def build_grid(a: float, b: float, h: float) -> Grid:
    """Construct a uniform grid on [a, b] with step h.

    Raises
    ------
    DomainError
        If the inputs are non-finite, out of order, or leave fewer than
        8 points (too few for the two-sided propagation stencils).
    """
    for name, val in (("a", a), ("b", b), ("h", h)):
        if not math.isfinite(val):
            raise DomainError(f"grid parameter {name} must be finite, got {val!r}")
    if h <= 0:
        raise DomainError(f"grid step must be positive, got {h!r}")
    if b <= a:
        raise DomainError(f"grid needs b > a, got a={a!r}, b={b!r}")
    dim = int((b - a) / h)
    if dim < 8:
        raise DomainError(
            f"grid has too few points (dim={dim}, need at least 8); "
            "shrink h or widen [a, b]"
        )
    return Grid(a=float(a), b=float(b), h=float(h), dim=dim)


def vec_max(samples) -> float:
    """Maximum absolute value of a sequence.

    Raises
    ------
    DomainError
        On an empty sequence or non-finite entries.
    """
    arr = np.asarray(samples, dtype=float)
    if arr.size == 0:
        raise DomainError("vec_max of an empty sequence")
    if not np.all(np.isfinite(arr)):
        raise DomainError("vec_max with non-finite entries")
    return float(np.max(np.abs(arr)))


def find_match_point(potential, energy: float, grid: Grid,
                     v_samples: np.ndarray | None = None) -> int:
    """Locate the match index: the first allowed-to-forbidden crossing.

    Scans grid points left to right and returns the smallest index j+1 with
    (E - V(x_j)) * (E - V(x_{j+1})) <= 0 and E - V(x_j) > 0. For the
    single-well potentials this solver targets, that is the outermost
    (rightmost) classical turning point; multi-well potentials would need a
    different rule.

    Parameters
    ----------
    potential : PotentialModel
        Evaluatable potential (see :mod:`numshoot.potentials`).
    energy : float
        Trial energy.
    grid : Grid
    v_samples : ndarray, optional
        Potential already evaluated on ``grid.points()``; pass it to avoid
        re-evaluation inside energy scans.

    Returns
    -------
    int
        Match index m with 2 <= m <= dim - 3, so the derivative stencil has
        m +- 1 available and the downward propagation keeps its two seeds.

    Raises
    ------
    NoTurningPointError
        If no crossing with a positive allowed side exists.
    TurningPointAtBoundaryError
        If the crossing sits closer than 2 points to either grid end.
    """
    from .potentials import evaluate

    if not math.isfinite(energy):
        raise DomainError(f"trial energy must be finite, got {energy!r}")
    vv = v_samples if v_samples is not None else evaluate(potential, grid.points())
    de1 = energy - vv[:-1]
    de2 = energy - vv[1:]
    hits = np.nonzero((de1 * de2 <= 0.0) & (de1 > 0.0))[0]
    if hits.size == 0:
        raise NoTurningPointError(
            f"no classical turning point on the grid at E={energy!r}"
        )
    match = int(hits[0]) + 1
    if match < 2 or match > grid.dim - 3:
        raise TurningPointAtBoundaryError(
            f"turning point at index {match} is too close to the grid "
            f"boundary (dim={grid.dim})"
        )
    return match
