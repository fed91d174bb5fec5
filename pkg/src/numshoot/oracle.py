"""Independent cross-checks: closed-form spectra and a finite-difference
eigensolver.

The finite-difference oracle discretizes -u'' + V u with the plain 3-point
Laplacian on the grid interior (Dirichlet ends) and extracts the lowest
eigenvalues by Sturm pivot counting plus bisection. It shares no code with
the propagation kernel, needs no linear-algebra dependency, and its brackets
are certified to the requested width, which makes it a trustworthy referee
for the shooting results at O(h^2) accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .grid import Grid
from .potentials import PotentialModel, evaluate

#: Bisection bracket width; comfortably below the documented 1e-10 bound so
#: shift-identity comparisons at 1e-10 stay robust.
BRACKET_WIDTH = 2.5e-11

ANALYTIC_KINDS = ("hydrogen", "morse", "quantum_dot", "harmonic", "particle_in_box")


@dataclass(frozen=True)
class AnalyticSystem:
    """Exactly solvable reference system.

    Parameters mirror the potential models: ``de``/``alpha`` for morse,
    ``omega`` for the quantum dot, ``stiffness`` for harmonic, ``length``
    for the box.
    """

    kind: str
    de: float = 16.0
    alpha: float = 2.0
    omega: float = 0.01
    stiffness: float = 1.0
    length: float = 1.0

    def __post_init__(self):
        if self.kind not in ANALYTIC_KINDS:
            raise DomainError(f"unknown analytic system {self.kind!r}")


def analytic_energy(system: AnalyticSystem, n: int, ell: int = 0) -> float:
    """Closed-form level of the reference system.

    hydrogen: -1/n^2 (n >= 1);
    morse:    2*alpha*sqrt(de)*(n + 1/2) - alpha^2*(n + 1/2)^2, for n >= 0
              below dissociation (with the default depth 16 and range 2 this
              gives 7 and 15 for the two bound levels);
    quantum_dot: 2*(n + ell + 1)*omega;
    harmonic: (2n + 1)*sqrt(stiffness);
    particle_in_box: (n*pi/length)^2 (n >= 1).

    Raises
    ------
    DomainError
        For quantum numbers outside the system's bound spectrum.
    """
    if system.kind == "hydrogen":
        if n < 1:
            raise DomainError(f"hydrogen principal quantum number must be >= 1, got {n}")
        return -1.0 / (n * n)
    if system.kind == "morse":
        n_top = np.sqrt(system.de) / system.alpha - 0.5
        if n < 0 or n > n_top:
            raise DomainError(
                f"morse level n={n} outside the bound ladder (n <= {n_top:.3f})"
            )
        half = n + 0.5
        return 2.0 * system.alpha * np.sqrt(system.de) * half \
            - system.alpha ** 2 * half * half
    if system.kind == "quantum_dot":
        if n < 0 or ell < 0:
            raise DomainError(f"quantum-dot quantum numbers must be >= 0, got n={n}, ell={ell}")
        return 2.0 * (n + ell + 1) * system.omega
    if system.kind == "harmonic":
        if n < 0:
            raise DomainError(f"harmonic level must be >= 0, got {n}")
        return (2.0 * n + 1.0) * np.sqrt(system.stiffness)
    # particle_in_box
    if n < 1:
        raise DomainError(f"box mode number must be >= 1, got {n}")
    return (n * np.pi / system.length) ** 2


def sturm_count_below(diag, off, lam: float) -> int:
    """Number of eigenvalues of the symmetric tridiagonal matrix below lam.

    Counts negative pivots of the LDL^T factorization of (T - lam*I); a zero
    pivot is replaced by a tiny negative value, which only matters on the
    measure-zero set where lam hits an eigenvalue of a leading minor.
    """
    d = np.asarray(diag, dtype=float)
    e = np.asarray(off, dtype=float)
    if d.size < 1 or e.size != d.size - 1:
        raise DomainError("tridiagonal shapes disagree")
    scale = float(np.max(np.abs(d))) + 2.0 * (float(np.max(np.abs(e))) if e.size else 0.0)
    pivmin = 2.220446049250313e-16 * max(scale, 1.0)
    dl = d.tolist()
    e2 = (e * e).tolist()
    t = dl[0] - lam
    count = 1 if t < 0.0 else 0
    for i in range(1, len(dl)):
        if -pivmin < t < pivmin:
            t = -pivmin
        t = (dl[i] - lam) - e2[i - 1] / t
        if t < 0.0:
            count += 1
    return count


def _bisect_eigenvalue(diag, off, index: int, lo: float, hi: float) -> float:
    while hi - lo > BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break  # interval at floating-point resolution
        if sturm_count_below(diag, off, mid) <= index:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def oracle_spectrum(potential: PotentialModel, grid: Grid, k: int,
                    v_samples: np.ndarray | None = None) -> list[float]:
    """Lowest k eigenvalues of the finite-difference Hamiltonian.

    The matrix acts on the grid interior (indices 1..dim-2) with Dirichlet
    conditions at both grid ends: diagonal 2/h^2 + V(x_i), off-diagonal
    -1/h^2. Each eigenvalue is bisected to an absolute bracket width of at
    most 1e-10. Accuracy against the continuum problem is O(h^2).

    Raises
    ------
    DomainError
        If k exceeds the interior dimension or k < 1.
    """
    interior = grid.dim - 2
    if k < 1:
        raise DomainError(f"need k >= 1 eigenvalues, got {k}")
    if k > interior:
        raise DomainError(f"k={k} exceeds interior dimension {interior}")
    vv = v_samples if v_samples is not None else evaluate(potential, grid.points())
    inv_h2 = 1.0 / (grid.h * grid.h)
    diag = 2.0 * inv_h2 + vv[1:-1]
    off = np.full(interior - 1, -inv_h2)
    radius = 2.0 * inv_h2
    lo = float(np.min(diag)) - radius
    hi = float(np.max(diag)) + radius
    return [_bisect_eigenvalue(diag, off, j, lo, hi) for j in range(k)]
