"""Bound-state eigensolver for one-dimensional and radial problems.

Two-sided shooting with a fourth-order three-point recurrence, secant energy
refinement, deterministic and Monte Carlo normalization, and an independent
finite-difference oracle for cross-checking every spectrum.
"""

from .errors import (BiasedEnvelopeError, ConvergenceError,
                     DegenerateFunctionError, DivergenceError, DomainError,
                     NoTurningPointError, NumshootError,
                     PartialSpectrumWarning, SingularStepError,
                     StalledSecantError, TurningPointAtBoundaryError,
                     UnscalableTrialError)
from .grid import Grid, build_grid, find_match_point, vec_max
from .kernel import StepCoefficients, propagate, step_generalized, step_standard
from .normalization import (McEstimate, mc_check_probability, mc_norm_integral,
                            normalize_amplitude, normalize_quadrature,
                            simpson_integral)
from .oracle import (AnalyticSystem, analytic_energy, oracle_spectrum,
                     sturm_count_below)
from .potentials import (RYDBERG_EV, PotentialModel, UnitsInfo,
                         effective_potential, evaluate, harmonic_potential,
                         hydrogen_potential, load_tabulated, morse_potential,
                         normal_form_q, quantum_dot_potential,
                         tabulated_potential)
from .presets import load_preset, parse_config_file
from .report import run_solve
from .shooting import ShootingOutcome, shoot
from .spectrum import (Eigenpair, PaperSchedule, SolverConfig, count_nodes,
                       refine_eigenvalue, scan_spectrum, secant_update)

__version__ = "0.1.0"

__all__ = [
    "AnalyticSystem", "BiasedEnvelopeError", "ConvergenceError",
    "DegenerateFunctionError", "DivergenceError", "DomainError", "Eigenpair",
    "Grid", "McEstimate", "NoTurningPointError", "NumshootError",
    "PaperSchedule", "PartialSpectrumWarning", "PotentialModel", "RYDBERG_EV",
    "ShootingOutcome", "SingularStepError", "SolverConfig",
    "StalledSecantError", "StepCoefficients", "TurningPointAtBoundaryError",
    "UnitsInfo", "UnscalableTrialError", "analytic_energy", "build_grid",
    "count_nodes", "effective_potential", "evaluate", "find_match_point",
    "harmonic_potential", "hydrogen_potential", "load_preset",
    "load_tabulated", "mc_check_probability", "mc_norm_integral",
    "morse_potential", "normal_form_q", "normalize_amplitude",
    "normalize_quadrature", "oracle_spectrum", "parse_config_file",
    "propagate", "quantum_dot_potential", "refine_eigenvalue", "run_solve",
    "scan_spectrum", "secant_update", "shoot", "simpson_integral",
    "step_generalized", "step_standard", "sturm_count_below",
    "tabulated_potential", "vec_max",
]
