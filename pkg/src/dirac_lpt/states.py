"""Discrete quantum numbers of the central-field Dirac problem."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import InvalidStateError, SupercriticalCouplingError


@dataclass(frozen=True)
class QuantumNumbers:
    """Angular and radial labels; chi = s(j + 1/2) with j = l - s/2."""

    s: int
    l: int
    n_r: int
    j: float
    chi: int


def make_state(s: int, l: int, n_r: int) -> QuantumNumbers:
    """Build a state from the sign s = +/-1, orbital number l and radial number n_r.

    For s = +1 the tower starts at l = 1, n_r = 1; for s = -1 any l >= 0 and
    n_r >= 0 are allowed.
    """
    if s not in (1, -1):
        raise ValueError(f"s must be +1 or -1, got {s!r}")
    if not isinstance(l, int) or l < 0:
        raise ValueError(f"l must be a non-negative integer, got {l!r}")
    if not isinstance(n_r, int) or n_r < 0:
        raise ValueError(f"n_r must be a non-negative integer, got {n_r!r}")
    if s == 1 and l == 0:
        raise InvalidStateError("s=+1 requires l >= 1 (j = l - 1/2 must be >= 1/2)")
    if s == 1 and n_r == 0:
        raise InvalidStateError("s=+1 requires n_r >= 1")
    j = l - s / 2.0
    chi = s * int(round(2 * j + 1)) // 2
    return QuantumNumbers(s=s, l=l, n_r=n_r, j=j, chi=chi)


def principal_N(q: QuantumNumbers, V0: float, W0: float) -> float:
    """Quantization count N = n_r + sqrt(chi^2 + W0^2 - V0^2).

    Counts the radial nodes plus the power-law index at the origin; the
    argument of the root must stay positive for a Coulombic bound state.
    """
    d = q.chi * q.chi + W0 * W0 - V0 * V0
    if d <= 0.0:
        raise SupercriticalCouplingError(
            f"chi^2 + W0^2 - V0^2 = {d:g} <= 0: bound-state formulas break down"
        )
    return q.n_r + math.sqrt(d)
