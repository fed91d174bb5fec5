"""Exception types raised by the solver.

Every failure mode the library reports has its own class so callers (and the
CLI) can map problems to exit codes and machine-readable reason strings
without parsing messages.
"""


class NumshootError(Exception):
    """Base class for all library errors."""


class DomainError(NumshootError, ValueError):
    """Invalid input: bad grid bounds, out-of-range arguments, singular
    evaluation points, malformed tables or quantum numbers."""


class NoTurningPointError(NumshootError):
    """No classically allowed-to-forbidden crossing exists on the grid for
    the trial energy (energy outside the well)."""


class TurningPointAtBoundaryError(NumshootError):
    """A turning point exists but sits too close to a grid boundary for the
    matching stencil and the two-point propagation seeds."""


class SingularStepError(NumshootError):
    """A three-point recurrence step has a near-zero denominator."""


class DivergenceError(NumshootError):
    """Propagated amplitude exceeded the overflow guard; the trial energy is
    far from an eigenvalue."""


class UnscalableTrialError(NumshootError):
    """The left solution vanishes at the match point, so the continuity
    rescale is undefined; the caller should perturb the trial energy."""


class StalledSecantError(NumshootError):
    """Secant update with equal mismatch values at both trial energies."""


class ConvergenceError(NumshootError):
    """Energy refinement hit the iteration cap.

    Carries ``best_delta``, the smallest |energy update| seen before giving
    up, to help diagnose near-misses.
    """

    def __init__(self, message: str, best_delta: float | None = None):
        super().__init__(message)
        self.best_delta = best_delta


class DegenerateFunctionError(NumshootError):
    """An operation that needs a nonzero function received all zeros."""


class BiasedEnvelopeError(NumshootError):
    """Hit-or-miss sampling envelope lies below the integrand maximum, which
    would bias the estimate."""


class PartialSpectrumWarning(UserWarning):
    """Fewer states were found below the scan ceiling than requested."""
