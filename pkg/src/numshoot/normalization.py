"""Eigenfunction normalization: amplitude, quadrature, and hit-or-miss.

The deterministic route (composite Simpson) is the default used by reports;
the hit-or-miss estimator is kept as a statistical cross-check. Random draws
come from numpy's seeded PCG64 generator so every estimate is reproducible
bit for bit from its seed; there is no global entropy anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BiasedEnvelopeError, DegenerateFunctionError, DomainError
from .grid import Grid, vec_max


@dataclass(frozen=True)
class McEstimate:
    """Hit-or-miss integral estimate.

    ``std_error`` follows the binomial formula (S / sqrt(N)) *
    sqrt(eff * (1 - eff)) with S the envelope box area.
    """

    integral: float
    efficiency: float
    std_error: float
    samples: int
    seed: int


def normalize_amplitude(psi) -> np.ndarray:
    """Scale so the maximum absolute value is exactly 1.

    Idempotent and sign-preserving.

    Raises
    ------
    DegenerateFunctionError
        On an all-zero input.
    """
    arr = np.asarray(psi, dtype=float)
    peak = vec_max(arr) if arr.size else 0.0
    if arr.size == 0 or peak == 0.0:
        raise DegenerateFunctionError("cannot amplitude-normalize a zero function")
    return arr / peak


def simpson_integral(values, h: float) -> float:
    """Composite Simpson integral of uniformly sampled values.

    Simpson needs an even interval count; with an odd count the rule covers
    all but the last interval and a single trapezoid closes it. For the
    decaying eigenfunction tails this solver integrates, that final
    trapezoid contributes far below the 1e-8 round-trip tolerance.
    """
    f = np.asarray(values, dtype=float)
    if f.size < 3:
        raise DomainError(f"need at least 3 samples for Simpson, got {f.size}")
    n_int = f.size - 1
    if n_int % 2 == 0:
        return float(h / 3.0 * (f[0] + 4.0 * f[1:-1:2].sum()
                                + 2.0 * f[2:-1:2].sum() + f[-1]))
    body = h / 3.0 * (f[0] + 4.0 * f[1:-2:2].sum() + 2.0 * f[2:-2:2].sum() + f[-2])
    return float(body + h / 2.0 * (f[-2] + f[-1]))


def normalize_quadrature(psi, grid: Grid) -> tuple[np.ndarray, float]:
    """Scale so the Simpson integral of psi^2 over the grid equals 1.

    Returns the scaled function and the integral of the input's square.
    Re-integrating the output reproduces 1 to within 1e-8.

    Raises
    ------
    DegenerateFunctionError
        If the integral is not positive.
    """
    arr = np.asarray(psi, dtype=float)
    if arr.size != grid.dim:
        raise DomainError(
            f"function has {arr.size} samples but grid has {grid.dim} points"
        )
    integral = simpson_integral(arr * arr, grid.h)
    if integral <= 0.0:
        raise DegenerateFunctionError(
            f"squared integral {integral!r} is not positive"
        )
    return arr / np.sqrt(integral), integral


def mc_norm_integral(psi, grid: Grid, n_samples: int, envelope: float,
                     seed: int) -> McEstimate:
    """Hit-or-miss estimate of the integral of psi^2 over [a, b].

    N pairs are drawn from a PCG64 generator seeded with ``seed``: first the
    N grid indices (uniform over all points), then the N heights (uniform on
    [0, envelope)). A pair is a hit when its height is at or below psi^2 at
    its index. The integral is envelope * (b - a) * hit fraction.

    Raises
    ------
    DomainError
        If n_samples < 100.
    BiasedEnvelopeError
        If the envelope lies below max(psi^2).
    """
    arr = np.asarray(psi, dtype=float)
    if arr.size != grid.dim:
        raise DomainError(
            f"function has {arr.size} samples but grid has {grid.dim} points"
        )
    if n_samples < 100:
        raise DomainError(f"need at least 100 samples, got {n_samples}")
    sq = arr * arr
    peak = float(sq.max()) if sq.size else 0.0
    if envelope < peak:
        raise BiasedEnvelopeError(
            f"envelope {envelope!r} below max(psi^2) = {peak!r}"
        )
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, grid.dim, size=n_samples)
    heights = rng.uniform(0.0, envelope, size=n_samples) if envelope > 0.0 \
        else np.zeros(n_samples)
    hits = int(np.count_nonzero(heights <= sq[idx])) if envelope > 0.0 else 0
    eff = hits / n_samples
    area = envelope * (grid.b - grid.a)
    integral = area * eff
    std_error = (area / np.sqrt(n_samples)) * np.sqrt(eff * (1.0 - eff))
    return McEstimate(integral=float(integral), efficiency=float(eff),
                      std_error=float(std_error), samples=int(n_samples),
                      seed=int(seed))


def mc_check_probability(normalized_psi, grid: Grid, n_samples: int,
                         seed: int) -> McEstimate:
    """Hit-or-miss re-check of a normalized function's total probability.

    Uses the function's own squared peak as the envelope, so the estimate
    should be statistically compatible with 1 for a correctly normalized
    input. For inputs whose peak is below 1 the envelope is tight; for a
    function scaled by c the estimate scales by c^2.
    """
    arr = np.asarray(normalized_psi, dtype=float)
    peak = vec_max(arr)
    return mc_norm_integral(arr, grid, n_samples, envelope=peak * peak, seed=seed)
