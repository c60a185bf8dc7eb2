"""Hard-coded analytic expressions for the low-order energy corrections.

Two families are printed in closed form and serve as cross-checks on the
recursion engine: orders 0..5 for a pure-vector screened-Coulomb series
(`pure_vector_coefficients`) and orders 0..3 for the general two-channel
exponentially screened case (`yukawa_coefficients`).  Both are evaluated
verbatim, in units of the particle mass.

Convention map (established numerically against the engine, which stores
coefficients of V(r) = (1/r) sum_i V_i r^i with attractive V_0 < 0): the
pure-vector expressions take the positive strength a = -V_0 = |V_0| and
reduced coefficients

    Vhat_i = (-1)**(i+1) * V_i / a      (equivalently (-1)**i * V_i / V_0),

i.e. the Taylor coefficients of the screening profile with alternating
signs stripped; for an exponential screen Vhat_i = lam**i / i!.  Under
this map the two families agree with each other and with the engine at
every order where they overlap; the literal reading a = V_0 reproduces
the engine only at even orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import compute_E0
from .potentials import PotentialSpec
from .states import QuantumNumbers, principal_N


@dataclass(frozen=True)
class ClosedFormInputs:
    """Positive strengths, screens, and the derived leading-order quantities.

    eps is the leading energy in m = 1 units and rho = sqrt(1 - eps^2);
    both always come from `compute_E0`, never from the caller, so that
    rho^2 + eps^2 = 1 holds to machine precision.
    """

    a: float
    b: float
    lam: float
    mu: float
    eps: float
    rho: float
    chi: int
    N: float


def closed_form_inputs(
    a: float, b: float, lam: float, mu: float, q: QuantumNumbers
) -> ClosedFormInputs:
    """Inputs for the closed forms; strengths are positive-attractive, screens in m=1 units."""
    if a < 0 or b < 0:
        raise ValueError(f"strengths must be >= 0, got a={a!r}, b={b!r}")
    N = principal_N(q, -a, -b)
    eps = compute_E0(q, -a, -b, 1.0)
    if not 0.0 < eps < 1.0:
        raise ValueError(f"leading energy eps = {eps!r} outside (0, 1)")
    rho = math.sqrt((1.0 - eps) * (1.0 + eps))
    return ClosedFormInputs(a=a, b=b, lam=lam, mu=mu, eps=eps, rho=rho, chi=q.chi, N=N)


def yukawa_coefficients(inputs: ClosedFormInputs, m: float = 1.0) -> list:
    """Corrections E[0..3] for the two-channel exponentially screened case.

    Returned in the energy unit of m; the screens stored in `inputs` are
    interpreted in units of m.
    """
    a, b = inputs.a, inputs.b
    lam, mu = inputs.lam, inputs.mu
    e, r = inputs.eps, inputs.rho
    chi, N = float(inputs.chi), inputs.N
    if a + b * e <= 0.0:
        raise ValueError("a + b*eps must be positive (enters the denominators)")
    r2 = r * r
    r4 = r2 * r2
    e2 = e * e
    e3 = e2 * e
    e4 = e2 * e2

    E0 = m * (N * math.sqrt(N * N + a * a - b * b) - a * b) / (N * N + a * a)
    E1 = a * lam + b * mu * e

    lam_part2 = (
        3.0 * a**3 * e
        - a * chi * (chi * e + 1.0) * r2
        + 2.0 * a * a * b * (2.0 * e2 + 1.0)
        + a * b * b * e * (e2 + 2.0)
    )
    mu_part2 = (
        3.0 * b**3 * e2
        - b * chi * e * r2
        - b * chi * chi * r2
        + 2.0 * b * b * a * e * (e2 + 2.0)
        + b * a * a * (2.0 * e2 + 1.0)
    )
    E2 = -(lam * lam * lam_part2 + mu * mu * mu_part2) / (4.0 * (b * e + a) * r2)

    lam_part3 = (
        a**4 * (4.0 * e2 + 1.0)
        - a * a * (2.0 * chi * chi * e2 + 3.0 * chi * e + chi * chi - 1.0) * r2
        + 3.0 * a**3 * b * e * (2.0 * e2 + 3.0)
        + a * a * b * b * (2.0 * e4 + 11.0 * e2 + 2.0)
        - a * b * (3.0 * chi + (3.0 * chi * chi - 1.0) * e) * r2
        + a * b**3 * e * (3.0 * e2 + 2.0)
    )
    mu_part3 = (
        b**4 * (-8.0 * e4 + 13.0 * e2)
        + b * b * (3.0 * chi * e3 + (2.0 * chi * chi + 1.0) * e2 - 6.0 * chi * e - 5.0 * chi * chi) * r2
        - 3.0 * b**3 * a * e * (2.0 * e4 - e2 - 6.0)
        - b * b * a * a * (4.0 * e4 - 14.0 * e2 - 5.0)
        - b * a * e * (3.0 * chi * e + 3.0 * chi * chi - 1.0) * r2
        + b * a**3 * e * (2.0 * e2 + 3.0)
    )
    cross_part3 = (
        9.0 * a**3 * b * e * r2
        - 6.0 * a * a * b * b * (2.0 * e4 - e2 - 1.0)
        + 3.0 * a * b**3 * e * r2 * (e2 + 2.0)
        - 3.0 * a * b * chi * (chi * e + 1.0) * r4
    )
    E3 = (
        lam**3 * lam_part3 + mu**3 * mu_part3 + lam * lam * mu * cross_part3
    ) / (12.0 * (a + b * e) * r4)

    return [E0, m * E1, m * E2, m * E3]


def pure_vector_coefficients(V, inputs: ClosedFormInputs) -> list:
    """Corrections E[0..5] for a pure-vector series, in m = 1 units.

    V must hold at least six reduced coefficients in the convention of the
    module docstring; V[0] is not used (the strength enters via inputs.a).
    """
    if len(V) < 6:
        raise ValueError(f"need at least 6 coefficients, got {len(V)}")
    a = inputs.a
    e, r = inputs.eps, inputs.rho
    chi, N = float(inputs.chi), inputs.N
    if r == 0.0:
        raise ValueError("rho = 0: expressions are singular at the continuum edge")
    V1, V2, V3, V4, V5 = (float(V[i]) for i in range(1, 6))
    r2 = r * r
    e2 = e * e
    e3 = e2 * e
    e4 = e2 * e2
    a2 = a * a
    a4 = a2 * a2
    c2 = chi * chi
    c3 = c2 * chi
    c4 = c2 * c2

    E0 = N / math.sqrt(N * N + a2)
    E1 = a * V1
    E2 = -(V2 / (2.0 * r2)) * (3.0 * a2 * e - chi * (chi * e + 1.0) * r2)
    E3 = (V3 / (2.0 * r2 * r2)) * (
        a2 * a * (4.0 * e2 + 1.0)
        - a * (2.0 * c2 * e2 + 3.0 * chi * e + c2 - 1.0) * r2
    )
    E4 = (1.0 / (8.0 * r2**3)) * (
        V2
        * V2
        * (
            a4 * e * (5.0 * e2 - 12.0)
            + a2 * e * (6.0 * c2 * r2 - 5.0) * r2
            + c2 * (c2 * e * (e2 + 2.0) + chi * (4.0 * e2 + 2.0) + 3.0 * e) * r2 * r2
        )
        + V4
        * (
            -5.0 * a4 * e * (4.0 * e2 + 3.0)
            + a2 * (6.0 * c2 * e * (2.0 * e2 + 3.0) + 6.0 * chi * (4.0 * e2 + 1.0) - 25.0 * e) * r2
            - 3.0 * chi * (c2 - 1.0) * (chi * e + 2.0) * r2 * r2
        )
    )
    E5 = (-a / (8.0 * r2**4)) * (
        V2
        * V3
        * (
            3.0 * a4 * (8.0 * e4 - 20.0 * e2 - 3.0)
            - a2 * (c2 * (32.0 * e4 - 36.0 * e2 - 10.0) + chi * e * (10.0 * e2 - 24.0) + 9.0 * (6.0 * e2 + 1.0)) * r2
            + chi
            * (30.0 * c2 * e3 + 24.0 * chi * e2 + 10.0 * e + chi + c3 * (8.0 * e4 + 8.0 * e2 - 1.0))
            * r2
            * r2
        )
        + V5
        * (
            -3.0 * a4 * (8.0 * e4 + 12.0 * e2 + 1.0)
            + a2 * (c2 * (16.0 * e4 + 48.0 * e2 + 6.0) + 10.0 * chi * e * (4.0 * e2 + 3.0) - 15.0 * (6.0 * e2 + 1.0)) * r2
            + (5.0 * c2 * (4.0 * e2 + 3.0) - 3.0 * c4 * (4.0 * e2 + 1.0) + 50.0 * chi * e - 30.0 * c3 * e - 12.0)
            * r2
            * r2
        )
    )
    return [E0, E1, E2, E3, E4, E5]


def vector_inputs_from_spec(pot: PotentialSpec, q: QuantumNumbers):
    """Map an attractive pure-vector spec onto the closed-form convention.

    Returns (Vhat, inputs) with Vhat_i = (-1)**(i+1) V_i / |V_0| per the
    module docstring; screens need not be exponential.
    """
    V0 = pot.vcoef(0)
    if V0 >= 0.0:
        raise ValueError("pure-vector closed forms require an attractive V_0 < 0")
    if any(pot.wcoef(i) != 0.0 for i in range(pot.truncation_order + 1)):
        raise ValueError("pure-vector closed forms require a vanishing scalar channel")
    a = -V0
    width = max(pot.truncation_order + 1, 6)
    vhat = [(-1.0) ** (i + 1) * pot.vcoef(i) / a for i in range(width)]
    inputs = closed_form_inputs(a, 0.0, pot.vector_screen, 0.0, q)
    return vhat, inputs
