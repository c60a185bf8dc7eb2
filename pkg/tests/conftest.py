import time

import pytest

from dirac_lpt import energy_series, make_state, solve_bound_state, yukawa_spec
from dirac_lpt.cli import screen_from_charge

MASS = 511.0034
ALPHA = 1.0 / 137.036
Z = 74
A = ALPHA * Z
LAM = screen_from_charge(ALPHA, Z)
LAM_HALF = screen_from_charge(ALPHA, Z / 2.0)

STATES = {1: (1, 1, 1), -1: (-1, 0, 1)}
MIXES = {
    "V": (A, LAM, 0.0, 0.0),
    "W": (0.0, 0.0, A, LAM),
    "VW": (A / 2.0, LAM_HALF, A / 2.0, LAM_HALF),
}


def table1_potential(mix, order=15):
    a_v, lam, a_s, mu = MIXES[mix]
    return yukawa_spec(a_v, lam, a_s, mu, order)


def table1_state(s):
    return make_state(*STATES[s])


@pytest.fixture(scope="session")
def table1_series():
    """The six benchmark series at order 15 (m = 1 units) plus wall time."""
    start = time.perf_counter()
    series = {
        (mix, s): energy_series(table1_potential(mix), table1_state(s), 1.0, 15)
        for mix in MIXES
        for s in STATES
    }
    elapsed = time.perf_counter() - start
    return {"series": series, "elapsed": elapsed}


@pytest.fixture(scope="session")
def oracle_row():
    """The six integrated eigenvalues (m = 1 units) plus warm wall time."""
    # warm the jitted integrator on an unrelated configuration first
    solve_bound_state(yukawa_spec(0.3, 0.02, 0.0, 0.0, 1), make_state(-1, 0, 0), 1.0, 1e-10)
    start = time.perf_counter()
    results = {
        (mix, s): solve_bound_state(table1_potential(mix), table1_state(s), 1.0, 1e-12)
        for mix in MIXES
        for s in STATES
    }
    elapsed = time.perf_counter() - start
    return {"results": results, "elapsed": elapsed}
