import math

import numpy as np
import pytest

import numshoot as ns
from numshoot.errors import DomainError
from numshoot.oracle import sturm_count_below


def test_analytic_hydrogen_levels():
    system = ns.AnalyticSystem(kind="hydrogen")
    assert ns.analytic_energy(system, 1) == -1.0
    assert ns.analytic_energy(system, 2) == -0.25
    assert ns.analytic_energy(system, 3) == pytest.approx(-1.0 / 9.0)
    with pytest.raises(DomainError):
        ns.analytic_energy(system, 0)


def test_analytic_morse_levels():
    system = ns.AnalyticSystem(kind="morse", de=16.0, alpha=2.0)
    assert ns.analytic_energy(system, 0) == pytest.approx(7.0)
    assert ns.analytic_energy(system, 1) == pytest.approx(15.0)
    with pytest.raises(DomainError):
        ns.analytic_energy(system, 2)  # above the two-level ladder


def test_analytic_quantum_dot_and_harmonic_and_box():
    dot = ns.AnalyticSystem(kind="quantum_dot", omega=0.01)
    assert ns.analytic_energy(dot, 4, ell=0) == pytest.approx(0.10)
    assert ns.analytic_energy(dot, 2, ell=2) == pytest.approx(0.10)
    osc = ns.AnalyticSystem(kind="harmonic", stiffness=1.0)
    assert [ns.analytic_energy(osc, n) for n in range(3)] == [1.0, 3.0, 5.0]
    box = ns.AnalyticSystem(kind="particle_in_box", length=1.0)
    assert ns.analytic_energy(box, 1) == pytest.approx(math.pi**2)
    with pytest.raises(DomainError):
        ns.analytic_energy(box, 0)


def test_oracle_free_particle_box_closed_form():
    # Grid spanning [0, 1] inclusive so the Dirichlet ends sit at the box
    # walls; the lowest discrete-Laplacian eigenvalue has a closed form.
    grid = ns.build_grid(0.0, 1.015, 0.01)
    assert grid.point(grid.dim - 1) == pytest.approx(1.0, abs=1e-12)
    pot = ns.tabulated_potential([-1.0, 2.0], [0.0, 0.0])
    lowest = ns.oracle_spectrum(pot, grid, 1)[0]
    closed = (2.0 - 2.0 * math.cos(math.pi * 0.01)) / 0.01**2
    assert lowest == pytest.approx(closed, abs=1e-9)
    assert closed == pytest.approx(math.pi**2, rel=1e-4)


def test_oracle_hydrogen_ground_near_analytic():
    grid, pot, cfg = ns.load_preset("hydrogen")
    ground = ns.oracle_spectrum(pot, grid, 1)[0]
    # O(h^2) discretization plus the inner-wall offset of this domain.
    assert abs(ground - (-1.0)) < 5e-3


def test_oracle_harmonic_low_levels():
    grid, pot, cfg = ns.load_preset("harmonic-test")
    levels = ns.oracle_spectrum(pot, grid, 3)
    for level, exact in zip(levels, (1.0, 3.0, 5.0)):
        assert abs(level - exact) < 1e-4


def test_oracle_nondecreasing_and_bounds():
    grid, pot, cfg = ns.load_preset("morse")
    levels = ns.oracle_spectrum(pot, grid, 4)
    assert levels == sorted(levels)


def test_oracle_rejects_bad_k():
    grid = ns.build_grid(0.0, 1.015, 0.01)
    pot = ns.harmonic_potential()
    with pytest.raises(DomainError):
        ns.oracle_spectrum(pot, grid, 0)
    with pytest.raises(DomainError):
        ns.oracle_spectrum(pot, grid, grid.dim)


def test_sturm_count_matches_numpy_reference():
    rng = np.random.default_rng(11)
    d = rng.uniform(-2.0, 2.0, size=40)
    e = rng.uniform(-1.0, 1.0, size=39)
    mat = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    eigs = np.linalg.eigvalsh(mat)
    for lam in (-3.0, eigs[0] - 1e-6, 0.5 * (eigs[4] + eigs[5]), eigs[-1] + 1.0):
        assert sturm_count_below(d, e, lam) == int(np.sum(eigs < lam))


def test_sturm_self_consistency_with_bisection():
    grid = ns.build_grid(0.0, 2.03, 0.02)
    pot = ns.harmonic_potential()
    levels = ns.oracle_spectrum(pot, grid, 5)
    vv = ns.evaluate(pot, grid.points())
    inv_h2 = 1.0 / grid.h**2
    d = 2.0 * inv_h2 + vv[1:-1]
    e = np.full(grid.dim - 3, -inv_h2)
    for j, level in enumerate(levels):
        assert sturm_count_below(d, e, level - 1e-8) == j
        assert sturm_count_below(d, e, level + 1e-8) == j + 1


def test_oracle_shift_identity():
    grid = ns.build_grid(-1.01, 5.01, 0.012)
    base = ns.morse_potential()
    shifted = ns.tabulated_potential(grid.points(),
                                     ns.evaluate(base, grid.points()) + 2.5)
    a = ns.oracle_spectrum(base, grid, 3)
    b = ns.oracle_spectrum(shifted, grid, 3)
    for x, y in zip(a, b):
        assert abs((y - 2.5) - x) <= 1e-10


def test_oracle_agrees_with_numpy_eigensolver():
    # Independent route: dense LAPACK on the same tridiagonal matrix.
    grid = ns.build_grid(0.0, 3.1, 0.05)
    pot = ns.harmonic_potential()
    mine = ns.oracle_spectrum(pot, grid, 4)
    vv = ns.evaluate(pot, grid.points())
    inv_h2 = 1.0 / grid.h**2
    mat = (np.diag(2.0 * inv_h2 + vv[1:-1])
           + np.diag(np.full(grid.dim - 3, -inv_h2), 1)
           + np.diag(np.full(grid.dim - 3, -inv_h2), -1))
    ref = np.linalg.eigvalsh(mat)[:4]
    assert np.allclose(mine, ref, atol=1e-9)
