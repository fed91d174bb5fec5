"""Three-point recurrences and directional propagation across a grid.

The standard step advances the solution of y'' + q(x) y = 0 with local error
O(h^6); the generalized step handles an additional first-derivative term
p(x) y'. Propagation over a grid is an inherently sequential three-term
recurrence, so the inner loop below runs over plain floats with precomputed
coefficients; parallelism belongs one level up, across independent energies.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, DomainError, SingularStepError
from .grid import Grid
from .potentials import PotentialModel, evaluate

#: Propagated amplitudes beyond this magnitude abort with DivergenceError.
OVERFLOW_GUARD = 1e300

#: Denominators smaller than this raise SingularStepError.
DENOMINATOR_FLOOR = 1e-12

DIRECTIONS = ("leftward_from_a", "rightward_from_b")
KERNELS = ("standard", "generalized")


@dataclass(frozen=True)
class StepCoefficients:
    """Inputs for one recurrence step.

    q0, q1, q2 are s(x) = E - V at the previous, current and next point in
    the direction of travel (so x-h, x, x+h when marching up, x+h, x, x-h
    when marching down). p and dp are the first-derivative coefficient and
    its derivative at the current point, used only by the generalized form;
    for a downward march pass p with flipped sign, which is the h -> -h
    substitution the reversed step requires.
    """

    q0: float
    q1: float
    q2: float
    h: float
    p: float = 0.0
    dp: float = 0.0

    def __post_init__(self):
        vals = (self.q0, self.q1, self.q2, self.h, self.p, self.dp)
        if not all(np.isfinite(v) for v in vals):
            raise DomainError(f"non-finite step coefficients: {vals}")
        if self.h <= 0:
            raise DomainError(f"step size must be positive, got {self.h!r}")


def step_standard(y0: float, y1: float, c: StepCoefficients) -> float:
    """One step of the standard recurrence.

    y2 = [2(1 - 5 h^2 q1 / 12) y1 - (1 + h^2 q0 / 12) y0] / (1 + h^2 q2 / 12)
    """
    hh = c.h * c.h
    den = 1.0 + hh * c.q2 / 12.0
    if abs(den) < DENOMINATOR_FLOOR:
        raise SingularStepError(f"standard step denominator {den!r} too small")
    return (2.0 * (1.0 - 5.0 * hh * c.q1 / 12.0) * y1
            - (1.0 + hh * c.q0 / 12.0) * y0) / den


def step_generalized(y0: float, y1: float, c: StepCoefficients) -> float:
    """One step of the recurrence with a first-derivative term.

    y2 = [ 2 {1 - [q1 - p'/5] 5h^2/12} y1
           - {1 - p h/2 + (q0 + p') h^2/12} y0 ]
         / {1 + p h/2 + (q2 + p') h^2/12}

    All three bracketed coefficients carry h^2/12, which is what makes the
    form reduce exactly to :func:`step_standard` when p = p' = 0.
    """
    hh = c.h * c.h
    den = 1.0 + c.p * c.h / 2.0 + (c.q2 + c.dp) * hh / 12.0
    if abs(den) < DENOMINATOR_FLOOR:
        raise SingularStepError(f"generalized step denominator {den!r} too small")
    num = (2.0 * (1.0 - (c.q1 - c.dp / 5.0) * 5.0 * hh / 12.0) * y1
           - (1.0 - c.p * c.h / 2.0 + (c.q0 + c.dp) * hh / 12.0) * y0)
    return num / den


def _radial_p(potential: PotentialModel, xs: np.ndarray):
    """First-derivative coefficient for the generalized kernel.

    Only the reduced hydrogen problem carries p = 2/x (its radial equation
    for R has a 2/x R' term); the other models are already first-derivative
    free, so the generalized kernel degenerates to the standard one.
    """
    if potential.kind == "hydrogen_reduced":
        return 2.0 / xs, -2.0 / (xs * xs)
    zero = np.zeros_like(xs)
    return zero, zero


def propagate(direction: str, grid: Grid, energy: float,
              potential: PotentialModel, seed0: float, seed1: float,
              stop_index: int, kernel: str = "standard",
              v_samples: np.ndarray | None = None) -> np.ndarray:
    """March the recurrence from one boundary toward the match point.

    ``leftward_from_a`` assigns seed0, seed1 at indices 0, 1 and fills up to
    ``stop_index + 1``; ``rightward_from_b`` assigns them at dim-1, dim-2 and
    fills down to ``stop_index - 1``. One point past the match is always
    produced because the derivative-matching stencil needs it. Entries
    outside the filled range are zero, and the boundary seed values are held
    exactly.

    Raises
    ------
    DivergenceError
        If any propagated amplitude exceeds 1e300; scans treat this as
        "trial energy far from an eigenvalue", not as a crash.
    """
    if direction not in DIRECTIONS:
        raise DomainError(f"unknown direction {direction!r}")
    if kernel not in KERNELS:
        raise DomainError(f"unknown kernel {kernel!r}")
    if not (0 <= stop_index < grid.dim):
        raise DomainError(f"stop index {stop_index} outside grid of dim {grid.dim}")
    if not (np.isfinite(seed0) and np.isfinite(seed1) and np.isfinite(energy)):
        raise DomainError("seeds and energy must be finite")

    xs = grid.points()
    vv = v_samples if v_samples is not None else evaluate(potential, xs)
    q = energy - vv
    h = grid.h
    hh = h * h
    y = np.zeros(grid.dim)

    if kernel == "standard":
        # f-form of the step: y2 = ((12 - 10 f1) y1 - f0 y0) / f2 with
        # f = 1 + h^2 q / 12; algebraically identical to step_standard.
        f = (1.0 + hh / 12.0 * q)
        used = (slice(0, stop_index + 2) if direction == "leftward_from_a"
                else slice(max(stop_index - 1, 0), grid.dim))
        if np.any(np.abs(f[used]) < DENOMINATOR_FLOOR):
            raise SingularStepError("near-zero recurrence denominator on the grid")
        fl = f.tolist()
        if direction == "leftward_from_a":
            y[0], y[1] = seed0, seed1
            y0, y1 = seed0, seed1
            for i in range(2, stop_index + 2):
                y2 = ((12.0 - 10.0 * fl[i - 1]) * y1 - fl[i - 2] * y0) / fl[i]
                if y2 > OVERFLOW_GUARD or y2 < -OVERFLOW_GUARD:
                    raise DivergenceError(f"upward propagation overflow at index {i}")
                y[i] = y2
                y0, y1 = y1, y2
        else:
            n = grid.dim
            y[n - 1], y[n - 2] = seed0, seed1
            y0, y1 = seed0, seed1
            for i in range(n - 3, stop_index - 2, -1):
                y2 = ((12.0 - 10.0 * fl[i + 1]) * y1 - fl[i + 2] * y0) / fl[i]
                if y2 > OVERFLOW_GUARD or y2 < -OVERFLOW_GUARD:
                    raise DivergenceError(f"downward propagation overflow at index {i}")
                y[i] = y2
                y0, y1 = y1, y2
        return y

    # Generalized kernel: coefficient arrays indexed by the center point.
    p, dp = _radial_p(potential, xs)
    if direction == "leftward_from_a":
        sign = 1.0
        lo, hi = 2, stop_index + 2
    else:
        sign = -1.0  # downward march is the h -> -h substitution
        lo, hi = grid.dim - 3, stop_index - 2

    a_mid = 2.0 * (1.0 - (q - dp / 5.0) * 5.0 * hh / 12.0)
    b_prev = 1.0 - sign * p * h / 2.0
    c_next = 1.0 + sign * p * h / 2.0
    al = a_mid.tolist()
    ql = q.tolist()
    dpl = dp.tolist()
    bl = b_prev.tolist()
    cl = c_next.tolist()

    if direction == "leftward_from_a":
        y[0], y[1] = seed0, seed1
        y0, y1 = seed0, seed1
        for i in range(lo, hi):
            m = i - 1
            den = cl[m] + (ql[i] + dpl[m]) * hh / 12.0
            if abs(den) < DENOMINATOR_FLOOR:
                raise SingularStepError(f"generalized denominator at index {i}")
            y2 = (al[m] * y1 - (bl[m] + (ql[i - 2] + dpl[m]) * hh / 12.0) * y0) / den
            if y2 > OVERFLOW_GUARD or y2 < -OVERFLOW_GUARD:
                raise DivergenceError(f"upward propagation overflow at index {i}")
            y[i] = y2
            y0, y1 = y1, y2
    else:
        n = grid.dim
        y[n - 1], y[n - 2] = seed0, seed1
        y0, y1 = seed0, seed1
        for i in range(lo, hi, -1):
            m = i + 1
            den = cl[m] + (ql[i] + dpl[m]) * hh / 12.0
            if abs(den) < DENOMINATOR_FLOOR:
                raise SingularStepError(f"generalized denominator at index {i}")
            y2 = (al[m] * y1 - (bl[m] + (ql[i + 2] + dpl[m]) * hh / 12.0) * y0) / den
            if y2 > OVERFLOW_GUARD or y2 < -OVERFLOW_GUARD:
                raise DivergenceError(f"downward propagation overflow at index {i}")
            y[i] = y2
            y0, y1 = y1, y2
    return y
