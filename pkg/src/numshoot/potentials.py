"""Effective potential models and the normal-form reduction helper.

All positions are dimensionless (Bohr radii for the hydrogen convention) and
all energies are in units of e^2/(2*a_B), i.e. Rydbergs, unless a preset's
description says otherwise. The radial problems are solved for the reduced
function u = x*R, whose equation has no first-derivative term; see
:func:`normal_form_q` for the algebraic identity behind that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import DomainError

#: Rydberg energy in eV; presets report energies in this unit.
RYDBERG_EV = 13.605693122994

KINDS = ("hydrogen_reduced", "morse", "quantum_dot", "harmonic", "tabulated")


@dataclass(frozen=True)
class UnitsInfo:
    """Energy-scale metadata attached to reports; conversions only."""

    rydberg_eV: float = RYDBERG_EV
    description: str = "energies in units of e^2/(2 a_B) (Rydberg), lengths in Bohr radii"


@dataclass(frozen=True, eq=False)
class PotentialModel:
    """Evaluatable effective potential.

    The centrifugal barrier ell*(ell+1)/x^2 is added exactly once, inside
    :func:`evaluate`, whenever ``ell > 0``. Instances are immutable and
    evaluation is pure, so models are safe to share across threads.

    Parameters are kind-specific:

    - ``morse``: well depth ``de`` and range ``alpha``, V = de*(1-exp(-alpha*x))^2
    - ``quantum_dot``: confinement frequency ``omega`` and harmonic exponent
      ``exponent`` (1 or 2), V = 1/x + omega^2 * x^exponent - 0.25/x^2
    - ``harmonic``: ``stiffness`` k, V = k*x^2
    - ``tabulated``: sample arrays ``xs``, ``vs`` interpolated linearly
    - ``hydrogen_reduced``: no parameters, V = -2/x (plus centrifugal term)
    """

    kind: str
    ell: int = 0
    de: float = 16.0
    alpha: float = 2.0
    omega: float = 0.01
    exponent: int = 2
    stiffness: float = 1.0
    xs: np.ndarray | None = None
    vs: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown potential kind {self.kind!r}")
        if self.ell < 0:
            raise DomainError(f"angular momentum must be >= 0, got {self.ell}")
        if self.kind == "quantum_dot" and self.exponent not in (1, 2):
            raise DomainError(
                f"quantum-dot harmonic exponent must be 1 or 2, got {self.exponent}"
            )

    @property
    def singular_at_zero(self) -> bool:
        return self.kind in ("hydrogen_reduced", "quantum_dot") or self.ell > 0


def hydrogen_potential(ell: int = 0) -> PotentialModel:
    """Reduced hydrogen potential -2/x with optional centrifugal term."""
    return PotentialModel(kind="hydrogen_reduced", ell=ell)


def morse_potential(de: float = 16.0, alpha: float = 2.0, ell: int = 0) -> PotentialModel:
    """Morse bond potential de*(1-exp(-alpha*x))^2."""
    if de <= 0 or alpha <= 0:
        raise DomainError("Morse parameters de and alpha must be positive")
    return PotentialModel(kind="morse", ell=ell, de=float(de), alpha=float(alpha))


def quantum_dot_potential(omega: float = 0.01, exponent: int = 2,
                          ell: int = 0) -> PotentialModel:
    """Two-electron quantum-dot effective potential.

    V(x) = 1/x + omega^2 * x**exponent - 0.25/x^2. The quadratic form
    (exponent=2) confines all the preset's target states inside the default
    domain; the linear form (exponent=1) is kept selectable for comparison
    but cannot confine them there.
    """
    if omega <= 0:
        raise DomainError("quantum-dot omega must be positive")
    return PotentialModel(kind="quantum_dot", ell=ell, omega=float(omega),
                          exponent=int(exponent))


def harmonic_potential(stiffness: float = 1.0, ell: int = 0) -> PotentialModel:
    """Harmonic test potential k*x^2."""
    if stiffness <= 0:
        raise DomainError("harmonic stiffness must be positive")
    return PotentialModel(kind="harmonic", ell=ell, stiffness=float(stiffness))


def tabulated_potential(xs, vs, ell: int = 0) -> PotentialModel:
    """Potential defined by samples, evaluated by linear interpolation.

    The table should be finer than the solver grid for the method's accuracy
    to survive interpolation; this is documented, not enforced.
    """
    xs = np.asarray(xs, dtype=float)
    vs = np.asarray(vs, dtype=float)
    if xs.ndim != 1 or xs.shape != vs.shape or xs.size < 2:
        raise DomainError("tabulated potential needs matching 1-D arrays of >= 2 samples")
    if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(vs))):
        raise DomainError("tabulated potential contains non-finite samples")
    if np.any(np.diff(xs) <= 0):
        raise DomainError("tabulated potential abscissas must be strictly increasing")
    return PotentialModel(kind="tabulated", ell=ell, xs=xs, vs=vs)


def load_tabulated(path: str | Path, ell: int = 0) -> PotentialModel:
    """Load a two-column (x, V) whitespace-separated text file.

    Lines starting with '#' are comments.
    """
    data = np.loadtxt(path, comments="#", ndmin=2)
    if data.shape[1] != 2:
        raise DomainError(f"expected two columns (x, V) in {path}, got {data.shape[1]}")
    return tabulated_potential(data[:, 0], data[:, 1], ell=ell)


def evaluate(model: PotentialModel, x):
    """Evaluate the effective potential at x (scalar or array).

    Raises
    ------
    DomainError
        At the x=0 singularity of the singular kinds, or outside the table
        range for tabulated potentials.
    """
    scalar = np.isscalar(x)
    xv = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xv)):
        raise DomainError("potential evaluation at non-finite position")
    if model.singular_at_zero and np.any(xv == 0.0):
        raise DomainError(f"{model.kind} potential is singular at x = 0")

    if model.kind == "hydrogen_reduced":
        out = -2.0 / xv
    elif model.kind == "morse":
        out = model.de * (1.0 - np.exp(-model.alpha * xv)) ** 2
    elif model.kind == "quantum_dot":
        out = 1.0 / xv + model.omega ** 2 * xv ** model.exponent - 0.25 / (xv * xv)
    elif model.kind == "harmonic":
        out = model.stiffness * xv * xv
    else:  # tabulated
        if np.any(xv < model.xs[0]) or np.any(xv > model.xs[-1]):
            raise DomainError("tabulated potential evaluated outside its table range")
        out = np.interp(xv, model.xs, model.vs)

    if model.ell > 0:
        out = out + model.ell * (model.ell + 1) / (xv * xv)
    if not np.all(np.isfinite(out)):
        raise DomainError("potential evaluation produced non-finite values")
    return float(out) if scalar else out


def effective_potential(base: PotentialModel, ell: int) -> PotentialModel:
    """Return ``base`` with its centrifugal term set to ell*(ell+1)/x^2.

    Setting, not stacking: the term appears exactly once in evaluations, and
    ell=0 leaves evaluations identical to the base everywhere.
    """
    if ell < 0:
        raise DomainError(f"angular momentum must be >= 0, got {ell}")
    return replace(base, ell=int(ell))


def normal_form_q(P: Callable[[float], float], dP: Callable[[float], float],
                  Q: Callable[[float], float], x: float) -> float:
    """Coefficient of the normal form of y'' + P y' + Q y = 0 at x.

    q(x) = Q(x) - P(x)^2/4 - P'(x)/2. For the radial problem, P = 2/x makes
    the correction terms cancel exactly (P^2/4 = 1/x^2 = -P'/2), which is why
    the reduced function u = x*R obeys the plain second-derivative equation
    and the standard recurrence applies unchanged.
    """
    p, dp, qq = P(x), dP(x), Q(x)
    val = qq - 0.25 * p * p - 0.5 * dp
    if not math.isfinite(val):
        raise DomainError(f"normal-form coefficient is non-finite at x={x!r}")
    return val
