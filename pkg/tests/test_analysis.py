import math

import pytest

from dirac_lpt import bracket_estimate, custom_spec, energy_series, make_state, partial_sums
from dirac_lpt.engine import EnergySeries
from conftest import MASS
from reference_values import PARTIAL_SUMS


def series_from_binding_sums(sums, m):
    corrections = [m - sums[0]]
    for k in range(1, len(sums)):
        corrections.append(sums[k - 1] - sums[k])
    return EnergySeries(
        corrections=tuple(corrections),
        m=m,
        state=None,
        potential_id="tabulated",
        order=len(sums) - 1,
    )


def test_partial_sums_roundtrip():
    sums = [2.0, 0.0, 1.2, 0.8, 1.05, 0.95]
    seq = partial_sums(series_from_binding_sums(sums, 3.0))
    assert seq.binding_sums == pytest.approx(sums, abs=1e-12)
    assert seq.even_indices == [0, 2, 4]
    assert seq.odd_indices == [1, 3, 5]


def test_constant_series_from_unscreened_engine():
    q = make_state(-1, 0, 1)
    series = energy_series(custom_spec([-0.5] + [0.0] * 10, [0.0] * 11), q, 1.0, 10)
    seq = partial_sums(series)
    assert all(b == seq.binding_sums[0] for b in seq.binding_sums)
    estimate, gap, k_star = bracket_estimate(seq)
    assert gap == 0.0
    assert estimate == seq.binding_sums[-1]


def test_alternating_toy_sequence():
    seq = partial_sums(series_from_binding_sums([2.0, 0.0, 1.2, 0.8, 1.05, 0.95], 3.0))
    estimate, gap, k_star = bracket_estimate(seq)
    assert k_star == 5
    assert estimate == pytest.approx(1.0, abs=1e-12)
    assert gap == pytest.approx(0.1, abs=1e-12)
    assert seq.monotone_warning is False


def test_single_term_series():
    q = make_state(-1, 0, 1)
    series = energy_series(custom_spec([-0.5], [0.0]), q, 1.0, 0)
    seq = partial_sums(series)
    assert seq.binding_sums == [1.0 - series.corrections[0]]
    with pytest.raises(ValueError):
        bracket_estimate(seq)


def test_published_column_bracket():
    # the tabulated vector column for the s=+1 state, in keV
    seq = partial_sums(series_from_binding_sums(PARTIAL_SUMS[("V", 1)], MASS))
    estimate, gap, k_star = bracket_estimate(seq)
    assert k_star == 15
    assert estimate == pytest.approx(12.297615, abs=1e-8)
    assert gap == pytest.approx(7.8e-5, abs=1e-9)
    assert seq.monotone_warning is False


def test_shift_invariance():
    sums = PARTIAL_SUMS[("W", -1)]
    base = partial_sums(series_from_binding_sums(sums, MASS))
    e0, g0, k0 = bracket_estimate(base)
    shift = 3.25
    shifted = partial_sums(series_from_binding_sums([b + shift for b in sums], MASS + shift))
    e1, g1, k1 = bracket_estimate(shifted)
    assert k1 == k0
    assert g1 == pytest.approx(g0, abs=1e-9)
    assert e1 == pytest.approx(e0 + shift, abs=1e-9)


def test_monotone_warning_flag():
    sums = [5.0, 1.0, 3.0, 2.0, 3.5, 2.2]  # even subsequence not decreasing
    seq = partial_sums(series_from_binding_sums(sums, 6.0))
    bracket_estimate(seq)
    assert seq.monotone_warning is True


def test_needs_at_least_four_sums():
    seq = partial_sums(series_from_binding_sums([1.0, 0.5, 0.8], 2.0))
    with pytest.raises(ValueError):
        bracket_estimate(seq)
