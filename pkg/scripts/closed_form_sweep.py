#!/usr/bin/env python3
"""Sweep the closed-form expressions against the recursion engine.

Prints the worst relative deviation per order over a random parameter grid
(strengths 0.1..0.6, screens 0.005..0.1, both benchmark states, m = 1).

Usage: python scripts/closed_form_sweep.py [N_POINTS]
"""

import sys

import numpy as np

from dirac_lpt import (
    closed_form_inputs,
    energy_series,
    make_state,
    pure_vector_coefficients,
    vector_inputs_from_spec,
    yukawa_coefficients,
    yukawa_spec,
)


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 100
    rng = np.random.default_rng(1)
    states = [make_state(1, 1, 1), make_state(-1, 0, 1)]

    worst_two_channel = [0.0] * 4
    worst_vector = [0.0] * 6
    for _ in range(n):
        a = float(rng.uniform(0.1, 0.6))
        b = float(rng.uniform(0.0, 0.6))
        lam = float(rng.uniform(0.005, 0.1))
        mu = float(rng.uniform(0.005, 0.1))
        for q in states:
            ref = yukawa_coefficients(closed_form_inputs(a, b, lam, mu, q))
            series = energy_series(yukawa_spec(a, lam, b, mu, 3), q, 1.0, 3)
            for k in range(4):
                rel = abs(series.corrections[k] - ref[k]) / max(abs(ref[k]), 1e-280)
                worst_two_channel[k] = max(worst_two_channel[k], rel)

            pot = yukawa_spec(a, lam, 0.0, 0.0, 5)
            vhat, inputs = vector_inputs_from_spec(pot, q)
            ref5 = pure_vector_coefficients(vhat, inputs)
            series5 = energy_series(pot, q, 1.0, 5)
            for k in range(6):
                rel = abs(series5.corrections[k] - ref5[k]) / max(abs(ref5[k]), 1e-280)
                worst_vector[k] = max(worst_vector[k], rel)

    print(f"{n} random points, both states, m = 1")
    print("two-channel closed forms vs engine (relative):")
    for k, w in enumerate(worst_two_channel):
        print(f"  order {k}: {w:.3e}")
    print("pure-vector closed forms vs engine (relative, mapped convention):")
    for k, w in enumerate(worst_vector):
        print(f"  order {k}: {w:.3e}")


if __name__ == "__main__":
    main()
