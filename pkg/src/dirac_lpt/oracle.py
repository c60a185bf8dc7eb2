"""Direct numerical eigenvalues of the radial Dirac system.

The coupled first-order system for the large/small components (G, F) is
integrated in its phase form: with G = rho sin(theta), F = rho cos(theta),

    theta' = P(r) cos^2(theta) + M(r) sin^2(theta) - (chi/r) sin(2 theta),
    P = E - V + m + W,   M = E - V - m - W,

which carries exactly the log-derivative information used for matching
(F/G = cot theta) while staying free of overflow and node-induced step
collapse.  An outward sweep starts from the power-law behaviour at the
origin, an inward sweep from the decaying envelope; the mismatch
D(E) = theta_out - theta_in at the matching radius increases
monotonically with E and passes through pi * (node count of G) at every
eigenvalue, so the eigenvalue search is a bracketed root-find with node
verification after convergence.

Only the closed-form potential values V(r), W(r) enter here; the series
coefficients of the perturbation engine are never consumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.optimize import brentq

from .exceptions import NoBoundStateError, WrongStateError
from .potentials import CUSTOM, PotentialSpec
from .states import QuantumNumbers

_CLOSED = 0
_SERIES = 1

_MAX_STEPS = 2_000_000


@dataclass(frozen=True)
class OracleResult:
    """Converged eigenvalue with search diagnostics (energy units of the call)."""

    E_num: float
    binding: float
    node_count: int
    iterations: int
    residual: float


@njit(cache=True)
def _potential_pair(x, kind, a_v, lam, a_s, mu, vc, wc):
    if kind == _CLOSED:
        V = -a_v * math.exp(-lam * x) / x
        W = -a_s * math.exp(-mu * x) / x
    else:
        sv = 0.0
        for idx in range(vc.shape[0] - 1, -1, -1):
            sv = sv * x + vc[idx]
        sw = 0.0
        for idx in range(wc.shape[0] - 1, -1, -1):
            sw = sw * x + wc[idx]
        V = sv / x
        W = sw / x
    return V, W


@njit(cache=True)
def _phase_rate(x, th, e, chi, kind, a_v, lam, a_s, mu, vc, wc):
    V, W = _potential_pair(x, kind, a_v, lam, a_s, mu, vc, wc)
    c = math.cos(th)
    s = math.sin(th)
    P = e - V + 1.0 + W
    M = e - V - 1.0 - W
    return P * c * c + M * s * s - (chi / x) * 2.0 * s * c


@njit(cache=True)
def _sweep(x0, x1, th0, e, chi, kind, a_v, lam, a_s, mu, vc, wc, rtol, atol):
    """Adaptive Dormand-Prince sweep of the phase equation from x0 to x1.

    Returns (theta_end, gross_pi_crossings, status); status 0 on success,
    1 if the step count limit was hit.
    """
    direction = 1.0 if x1 > x0 else -1.0
    x = x0
    th = th0
    crossings = 0
    h = direction * min(abs(x0) * 0.5, abs(x1 - x0) * 1e-3 + 1e-12)
    if h == 0.0:
        h = direction * 1e-8
    steps = 0
    while (x1 - x) * direction > 0.0:
        if steps > _MAX_STEPS:
            return th, crossings, 1
        steps += 1
        if (x + h - x1) * direction > 0.0:
            h = x1 - x
        k1 = _phase_rate(x, th, e, chi, kind, a_v, lam, a_s, mu, vc, wc)
        k2 = _phase_rate(x + h * 0.2, th + h * 0.2 * k1, e, chi, kind, a_v, lam, a_s, mu, vc, wc)
        k3 = _phase_rate(
            x + h * 0.3, th + h * (0.075 * k1 + 0.225 * k2), e, chi, kind, a_v, lam, a_s, mu, vc, wc
        )
        k4 = _phase_rate(
            x + h * 0.8,
            th + h * (0.9777777777777777 * k1 - 3.7333333333333334 * k2 + 3.5555555555555554 * k3),
            e, chi, kind, a_v, lam, a_s, mu, vc, wc,
        )
        k5 = _phase_rate(
            x + h * 0.8888888888888888,
            th + h * (
                2.9525986892242035 * k1
                - 11.595793324188385 * k2
                + 9.822892851699436 * k3
                - 0.2908093278463649 * k4
            ),
            e, chi, kind, a_v, lam, a_s, mu, vc, wc,
        )
        k6 = _phase_rate(
            x + h,
            th + h * (
                2.8462752525252526 * k1
                - 10.757575757575758 * k2
                + 8.906422717743473 * k3
                + 0.2784090909090909 * k4
                - 0.2735313036020583 * k5
            ),
            e, chi, kind, a_v, lam, a_s, mu, vc, wc,
        )
        th5 = th + h * (
            0.09114583333333333 * k1
            + 0.44923629829290207 * k3
            + 0.6510416666666666 * k4
            - 0.322376179245283 * k5
            + 0.13095238095238096 * k6
        )
        k7 = _phase_rate(x + h, th5, e, chi, kind, a_v, lam, a_s, mu, vc, wc)
        th4 = th + h * (
            0.08991319444444444 * k1
            + 0.4534890685834082 * k3
            + 0.6140625 * k4
            - 0.2715123820754717 * k5
            + 0.08904761904761904 * k6
            + 0.025 * k7
        )
        err = abs(th5 - th4)
        tol = atol + rtol * max(abs(th), abs(th5))
        if err <= tol or abs(h) <= abs(x) * 1e-14:
            old = th
            th = th5
            x = x + h
            fo = math.floor(old / math.pi)
            fn = math.floor(th / math.pi)
            if fn != fo:
                crossings += abs(int(fn - fo))
        if err > 0.0:
            factor = 0.9 * (tol / err) ** 0.2
            if factor < 0.2:
                factor = 0.2
            elif factor > 5.0:
                factor = 5.0
            h *= factor
        else:
            h *= 5.0
    return th, crossings, 0


def _scaled_params(pot: PotentialSpec, m: float):
    """Potential description in mass units: x = m r, couplings dimensionless."""
    if pot.vector_kind == CUSTOM or pot.scalar_kind == CUSTOM:
        vc = np.array([pot.vcoef(i) / m**i for i in range(pot.truncation_order + 1)])
        wc = np.array([pot.wcoef(i) / m**i for i in range(pot.truncation_order + 1)])
        return _SERIES, 0.0, 0.0, 0.0, 0.0, vc, wc
    empty = np.zeros(1)
    return (
        _CLOSED,
        pot.vector_strength,
        pot.vector_screen / m,
        pot.scalar_strength,
        pot.scalar_screen / m,
        empty,
        empty,
    )


def _origin_phase(chi, V0, W0):
    """Phase of the regular power-law solution at the origin.

    The indicial vector (g0, f0) solves a 2x2 homogeneous system; the
    better-conditioned of its two row solutions is used.  (For chi > 0
    with W0 = V0 the large component's leading coefficient vanishes and G
    starts one power above the generic index.)
    """
    gamma = math.sqrt(chi * chi + W0 * W0 - V0 * V0)
    n1 = (W0 - V0, gamma + chi)
    n2 = (gamma - chi, V0 + W0)
    g0, f0 = max(n1, n2, key=lambda v: v[0] * v[0] + v[1] * v[1])
    if g0 == 0.0 and f0 == 0.0:
        g0, f0 = 1.0, 0.0
    if g0 < 0.0 or (g0 == 0.0 and f0 < 0.0):
        g0, f0 = -g0, -f0
    return math.atan2(g0, f0), gamma


def solve_bound_state(
    pot: PotentialSpec,
    q: QuantumNumbers,
    m: float,
    tol: float = 1e-12,
    *,
    r_min: float = None,
    match_radius: float = None,
    envelope_decades: float = 18.0,
    bracket: tuple = (0.5, 1.0 - 1e-9),
    rtol: float = 1e-11,
) -> OracleResult:
    """Find the bound level with radial number q.n_r by two-sided phase shooting.

    tol bounds the eigenvalue uncertainty as a fraction of m.  r_min and
    match_radius are in units of 1/m; the inward start is placed where the
    decaying envelope has fallen by `envelope_decades` decades.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    chi = q.chi
    V0 = pot.vcoef(0)
    W0 = pot.wcoef(0)
    kind, a_v, lam, a_s, mu, vc, wc = _scaled_params(pot, m)
    th0, gamma = _origin_phase(chi, V0, W0)
    # position of the requested level within its fixed-chi tower
    rank = q.n_r - (1 if chi > 0 else 0)

    x_min = (r_min * m) if r_min is not None else 1e-6
    if match_radius is not None:
        x_match = match_radius * m
    else:
        strength = abs(V0) + abs(W0)
        x_match = (q.n_r + abs(chi) + 1) ** 2 / max(strength, 0.05)
        screen = max(lam, mu)
        if screen > 0.0:
            x_match = min(x_match, 0.9 / screen)
        x_match = max(x_match, 8.0 * x_min)

    span = envelope_decades * math.log(10.0) + 5.0
    state = {"evals": 0, "last": None}

    def mismatch(e):
        """Phase difference of the two sweeps at the matching radius.

        Increases monotonically with e and passes through a multiple of pi
        at every bound level, so consecutive multiples above the bracket
        floor enumerate the channel's spectrum in energy order.
        """
        state["evals"] += 1
        kappa = math.sqrt(max((1.0 - e) * (1.0 + e), 1e-30))
        x_max = x_match + span / kappa
        th_out, c_out, st1 = _sweep(
            x_min, x_match, th0, e, float(chi), kind, a_v, lam, a_s, mu, vc, wc, rtol, 1e-11
        )
        V_far, W_far = (
            (-a_v * math.exp(-lam * x_max) / x_max, -a_s * math.exp(-mu * x_max) / x_max)
            if kind == _CLOSED
            else (0.0, 0.0)
        )
        k_loc = math.sqrt(max((1.0 + W_far) ** 2 - (e - V_far) ** 2, 1e-30))
        th_in0 = math.atan2(1.0, -k_loc / (e - V_far + 1.0 + W_far))
        th_in, c_in, st2 = _sweep(
            x_max, x_match, th_in0, e, float(chi), kind, a_v, lam, a_s, mu, vc, wc, rtol, 1e-11
        )
        if st1 or st2:
            raise NoBoundStateError("phase integration exceeded the step budget")
        state["last"] = (e, th_out, th_in, c_out + c_in)
        return th_out - th_in

    lo, hi = bracket
    d_lo = mismatch(lo)
    d_hi = mismatch(hi)
    # first matching root above the bracket floor sits at the next multiple
    target_index = math.ceil(d_lo / math.pi) + rank
    target = math.pi * target_index
    if d_hi < target:
        raise NoBoundStateError(
            f"no sign change in the matching function over ({lo:g} m, {hi:g} m) "
            f"for level n_r = {q.n_r}: mismatch spans {d_lo:g} .. {d_hi:g}, "
            f"target {target:g}"
        )
    e_root = brentq(lambda e: mismatch(e) - target, lo, hi, xtol=tol, rtol=1e-15, maxiter=200)
    resid = mismatch(e_root) - target
    nodes = state["last"][3]
    if nodes != target_index:
        raise WrongStateError(
            f"phase winding {nodes} inconsistent with the targeted level "
            f"(expected {target_index}); adjust the bracket"
        )
    return OracleResult(
        E_num=e_root * m,
        binding=(1.0 - e_root) * m,
        node_count=nodes,
        iterations=state["evals"],
        residual=abs(resid),
    )
