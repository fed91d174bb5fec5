import warnings

import pytest

import numshoot as ns
from numshoot.errors import PartialSpectrumWarning


@pytest.fixture(scope="session")
def hydrogen_run():
    grid, potential, config = ns.load_preset("hydrogen")
    states = ns.scan_spectrum(grid, potential, config)
    return grid, potential, config, states


@pytest.fixture(scope="session")
def morse_run():
    grid, potential, config = ns.load_preset("morse")
    states = ns.scan_spectrum(grid, potential, config)
    return grid, potential, config, states


@pytest.fixture(scope="session")
def qdot_run():
    grid, potential, config = ns.load_preset("qdot")
    states = ns.scan_spectrum(grid, potential, config)
    return grid, potential, config, states


@pytest.fixture(scope="session")
def harmonic_run():
    grid, potential, config = ns.load_preset("harmonic-test")
    states = ns.scan_spectrum(grid, potential, config)
    return grid, potential, config, states


@pytest.fixture(scope="session")
def all_runs(hydrogen_run, morse_run, qdot_run, harmonic_run):
    return {"hydrogen": hydrogen_run, "morse": morse_run, "qdot": qdot_run,
            "harmonic-test": harmonic_run}


def solve_quiet(*args, **kwargs):
    """scan_spectrum that tolerates a deliberate shortfall."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PartialSpectrumWarning)
        return ns.scan_spectrum(*args, **kwargs)
