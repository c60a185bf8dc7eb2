"""Radial interactions: closed forms plus their power-series coefficients.

Both channels (Lorentz-vector V and Lorentz-scalar W) are Coulomb-like at
the origin and are stored as the coefficients c_i of (1/r) sum_i c_i r^i,
together with closed-form evaluators used by the numerical solver.  In
natural units (hbar = c = 1) the coefficient c_i carries energy^i; c_0 is
dimensionless and an attractive channel has c_0 < 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

COULOMB = "coulomb"
YUKAWA = "yukawa"
CUSTOM = "custom-series"


@dataclass(frozen=True)
class PotentialSpec:
    """Vector/scalar radial interaction and its series coefficients.

    Immutable after construction; carries no state (quantum-number)
    information, so instances can be shared freely.
    """

    vector_kind: str
    scalar_kind: str
    vector_coeffs: tuple
    scalar_coeffs: tuple
    vector_strength: float = 0.0
    vector_screen: float = 0.0
    scalar_strength: float = 0.0
    scalar_screen: float = 0.0

    @property
    def truncation_order(self) -> int:
        return len(self.vector_coeffs) - 1

    def vcoef(self, i: int) -> float:
        """V_i, with zero outside the stored range."""
        if 0 <= i < len(self.vector_coeffs):
            return self.vector_coeffs[i]
        return 0.0

    def wcoef(self, i: int) -> float:
        if 0 <= i < len(self.scalar_coeffs):
            return self.scalar_coeffs[i]
        return 0.0

    @property
    def exact_beyond_truncation(self) -> bool:
        """True when every coefficient past the stored range is exactly zero.

        A screened (yukawa) channel has an infinite Taylor tail, so its
        truncated array does not represent the closed form beyond order K.
        Coulomb and custom-series channels are exact by definition.
        """
        v_tail = self.vector_kind == YUKAWA and self.vector_strength * self.vector_screen != 0.0
        w_tail = self.scalar_kind == YUKAWA and self.scalar_strength * self.scalar_screen != 0.0
        return not (v_tail or w_tail)

    def vector_value(self, r: float) -> float:
        """Closed-form V(r); for custom-series channels the truncated sum."""
        if self.vector_kind == CUSTOM:
            return _series_value(self.vector_coeffs, r)
        return -self.vector_strength * math.exp(-self.vector_screen * r) / r

    def scalar_value(self, r: float) -> float:
        if self.scalar_kind == CUSTOM:
            return _series_value(self.scalar_coeffs, r)
        return -self.scalar_strength * math.exp(-self.scalar_screen * r) / r

    def describe(self) -> str:
        if self.vector_kind == CUSTOM:
            return f"custom-series(K={self.truncation_order})"
        return (
            f"V:{self.vector_kind}(a={self.vector_strength:g},screen={self.vector_screen:g})"
            f"+W:{self.scalar_kind}(a={self.scalar_strength:g},screen={self.scalar_screen:g})"
            f"[K={self.truncation_order}]"
        )


def _series_value(coeffs, r):
    # Horner on sum_i c_i r^i, then the overall 1/r
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc / r


def _check_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


def yukawa_spec(a_v: float, lam: float, a_s: float, mu: float, K: int) -> PotentialSpec:
    """Attractive screened-Coulomb pair V(r) = -(a_v/r) e^{-lam r}, W(r) = -(a_s/r) e^{-mu r}.

    Stores the Taylor coefficients of both channels through order K:
    V_i = -a_v (-lam)^i / i!, and likewise for W.  Screens are in the same
    energy unit as the mass the series will be evaluated with.
    """
    if not isinstance(K, int) or K < 0:
        raise ValueError(f"truncation order K must be a non-negative integer, got {K!r}")
    for name, value in (("a_v", a_v), ("lam", lam), ("a_s", a_s), ("mu", mu)):
        _check_finite(name, value)
        if value < 0:
            raise ValueError(f"{name} must be >= 0, got {value!r}")
    return PotentialSpec(
        vector_kind=YUKAWA if lam > 0 else COULOMB,
        scalar_kind=YUKAWA if mu > 0 else COULOMB,
        vector_coeffs=_exp_coeffs(a_v, lam, K),
        scalar_coeffs=_exp_coeffs(a_s, mu, K),
        vector_strength=a_v,
        vector_screen=lam,
        scalar_strength=a_s,
        scalar_screen=mu,
    )


def _exp_coeffs(strength, screen, K):
    coeffs = []
    term = -strength
    for i in range(K + 1):
        coeffs.append(term)
        term *= -screen / (i + 1)
    return tuple(coeffs)


def coulomb_spec(a_v: float, a_s: float, K: int = 0) -> PotentialSpec:
    """Unscreened limit: V_0 = -a_v, W_0 = -a_s, all higher coefficients zero."""
    return yukawa_spec(a_v, 0.0, a_s, 0.0, K)


def custom_spec(V, W) -> PotentialSpec:
    """Spec with explicitly supplied coefficient lists (stored verbatim).

    The closed-form evaluators are then the truncated series themselves,
    which limits how far out the numerical solver can trust them.
    """
    V = list(V)
    W = list(W)
    if not V or not W:
        raise ValueError("coefficient lists must be non-empty")
    if len(V) != len(W):
        raise ValueError(f"coefficient lists must have equal length, got {len(V)} and {len(W)}")
    for name, coeffs in (("V", V), ("W", W)):
        for i, c in enumerate(coeffs):
            _check_finite(f"{name}[{i}]", float(c))
    return PotentialSpec(
        vector_kind=CUSTOM,
        scalar_kind=CUSTOM,
        vector_coeffs=tuple(float(c) for c in V),
        scalar_coeffs=tuple(float(c) for c in W),
    )
