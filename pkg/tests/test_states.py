import math

import pytest

from dirac_lpt import InvalidStateError, SupercriticalCouplingError, make_state, principal_N


def test_benchmark_states():
    up = make_state(1, 1, 1)
    assert (up.j, up.chi) == (0.5, 1)
    down = make_state(-1, 0, 1)
    assert (down.j, down.chi) == (0.5, -1)


def test_derived_chi():
    q = make_state(-1, 2, 0)
    assert q.j == 2.5
    assert q.chi == -3


@pytest.mark.parametrize("s,l,n_r", [(1, 0, 1), (1, 1, 0)])
def test_inconsistent_combinations(s, l, n_r):
    with pytest.raises(InvalidStateError):
        make_state(s, l, n_r)


@pytest.mark.parametrize("s,l,n_r", [(0, 1, 1), (2, 1, 1), (1, -1, 1), (1, 1, -1)])
def test_invalid_arguments(s, l, n_r):
    with pytest.raises(ValueError):
        make_state(s, l, n_r)


def test_count_ground_coulomb():
    q = make_state(-1, 0, 0)
    assert principal_N(q, -0.5, 0.0) == pytest.approx(math.sqrt(0.75), rel=1e-15)


def test_count_equal_mix_is_integer():
    q = make_state(1, 1, 1)
    assert principal_N(q, -0.35, -0.35) == 2.0
    q = make_state(-1, 0, 1)
    assert principal_N(q, -0.123, -0.123) == 2.0


def test_count_scalar_benchmark():
    # direct binary64 arithmetic is the reference here
    q = make_state(-1, 0, 1)
    expected = 1.0 + math.sqrt(1.0 + 0.540004**2)
    assert principal_N(q, 0.0, -0.540004) == pytest.approx(expected, rel=1e-15)
    assert expected == pytest.approx(2.1364877, abs=1e-7)


def test_count_sign_symmetries():
    up = make_state(1, 1, 1)
    down = make_state(-1, 0, 1)
    assert principal_N(up, -0.3, -0.2) == principal_N(down, -0.3, -0.2)
    assert principal_N(down, -0.3, -0.2) == principal_N(down, 0.3, 0.2)


def test_count_weak_coupling_limit():
    q = make_state(-1, 1, 2)
    assert principal_N(q, -1e-12, 0.0) == pytest.approx(q.n_r + abs(q.chi), rel=1e-12)


def test_supercritical_coupling():
    q = make_state(-1, 0, 1)
    with pytest.raises(SupercriticalCouplingError):
        principal_N(q, -1.2, 0.0)
