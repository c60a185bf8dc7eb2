"""Triangular Laurent-coefficient recursions for the energy corrections.

The logarithmic derivative of the large radial component is expanded in a
formal semiclassical series; the order-k term behaves like r^{-k} times a
power series, and the auxiliary channel-mixing function like r^{-2-k} times
a power series.  Balancing powers of r order by order yields a triangular
recursion for the coefficient tables R[k][i] and Q[k][i], and requiring the
residue (1/r coefficient) of each order to vanish beyond the first yields
the energy corrections E[k].

Index conventions used throughout:
  * any table element with a negative row or column index is zero;
  * R[0][0] = -sqrt(m^2 - E0^2) < 0 (decaying branch), R[0][i>0] = 0;
  * rows are built full width 0..K, which is all that E_{<=K} ever needs.

Every correction is computed twice: from the closed recursion
(`energy_correction`) and by solving the vanishing-residue condition
directly with a propagated (value, slope) pair (`quantization_solve`).
The two routes share only the order-k balance, so a transcription error
in either one shows up as a dual-path disagreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .exceptions import (
    ConsistencyError,
    DegenerateQuantizationError,
    DegenerateStateError,
    NoBoundStateError,
    SupercriticalCouplingError,
)
from .potentials import PotentialSpec
from .states import QuantumNumbers, principal_N

# Engineering tolerances sized to binary64 at K <= 15.
RESIDUE_RTOL = 1e-9
N_RTOL = 1e-12


class _Linear:
    """value + slope * x for the one unknown being solved for.

    Only one factor of any product ever carries a slope (the residue is an
    affine function of the unknown correction), so the quadratic term of a
    product is rejected rather than propagated.
    """

    __slots__ = ("val", "slp")

    def __init__(self, val, slp=0.0):
        self.val = val
        self.slp = slp

    def __add__(self, other):
        if isinstance(other, _Linear):
            return _Linear(self.val + other.val, self.slp + other.slp)
        return _Linear(self.val + other, self.slp)

    __radd__ = __add__

    def __neg__(self):
        return _Linear(-self.val, -self.slp)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _Linear):
            if self.slp != 0.0 and other.slp != 0.0:
                raise ArithmeticError("product of two slope-carrying terms is not linear")
            return _Linear(
                self.val * other.val, self.val * other.slp + self.slp * other.val
            )
        return _Linear(self.val * other, self.slp * other)

    __rmul__ = __mul__

    def __repr__(self):
        return f"_Linear({self.val!r}, {self.slp!r})"


def _total(terms):
    """Compensated (exactly rounded) sum of mixed float/_Linear terms."""
    try:
        return math.fsum(terms)
    except TypeError:
        vals = []
        slps = []
        for t in terms:
            if isinstance(t, _Linear):
                vals.append(t.val)
                slps.append(t.slp)
            else:
                vals.append(t)
        return _Linear(math.fsum(vals), math.fsum(slps))


# Seam for the order-k balance summation; tests may wrap it to inject faults.
_bracket_total = _total


@dataclass
class LaurentTables:
    """Coefficient tables R[k][i], Q[k][i], corrections E[k] and diagnostics."""

    R: list
    Q: list
    E: list
    N: float
    m: float
    chi: int
    residues: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.E) - 1


@dataclass(frozen=True)
class EnergySeries:
    """Ordered corrections E[0..K] with run metadata."""

    corrections: tuple
    m: float
    state: QuantumNumbers
    potential_id: str
    order: int
    max_dual_residual: Optional[float] = None

    def partial_sum(self, k: int) -> float:
        return math.fsum(self.corrections[: k + 1])


def compute_E0(q: QuantumNumbers, V0: float, W0: float, m: float) -> float:
    """Leading energy: exact bound-state solution of the unscreened problem.

    E0 = m (N sqrt(N^2 + V0^2 - W0^2) - V0 W0) / (N^2 + V0^2), on the branch
    selected by the decaying boundary condition.
    """
    if m <= 0:
        raise ValueError(f"mass must be positive, got {m!r}")
    N = principal_N(q, V0, W0)
    d = N * N + V0 * V0 - W0 * W0
    if d < 0.0:
        raise SupercriticalCouplingError(
            f"N^2 + V0^2 - W0^2 = {d:g} < 0 for N = {N:g}"
        )
    E0 = m * (N * math.sqrt(d) - V0 * W0) / (N * N + V0 * V0)
    if abs(E0) > m:
        raise NoBoundStateError(f"|E0| = {abs(E0):g} exceeds m = {m:g}")
    return E0


def _bracket(k, i, R, Q, E, pot, chi, m):
    """Additive terms of the order-k, power-(i-k) balance.

    The caller divides by -2 R[0][0] to obtain the table entry R[k][i].
    E[k] enters only through the i == k product sum, so entries with i < k
    never need the order-k correction.
    """
    terms = [(i - k + 1) * R[k - 1][i]]
    for j in range(1, k):
        Rj = R[j]
        Rkj = R[k - j]
        terms += [Rj[p] * Rkj[i - p] for p in range(i + 1)]
    for j in range(0, k - 1):
        Qj = Q[j]
        Rk2j = R[k - 2 - j]
        terms += [-(Qj[p] * Rk2j[i - p]) for p in range(i + 1)]
    if k >= 3:
        terms.append(-chi * Q[k - 3][i])
    if i == k:
        terms += [E[j] * E[k - j] for j in range(k + 1)]
    terms.append(-2.0 * E[k - 1] * pot.vcoef(i - k + 1))
    if k == 2:
        terms += [
            pot.vcoef(p) * pot.vcoef(i - p) - pot.wcoef(p) * pot.wcoef(i - p)
            for p in range(i + 1)
        ]
    if k == 1:
        terms.append(-2.0 * m * pot.wcoef(i))
    if k == 2 and i == 0:
        terms.append(-float(chi * (chi + 1)))
    return _bracket_total(terms)


def _q_row_entries(kq, width, Q, E, pot, m):
    """Coefficients of the order-kq channel-mixing row, width 0..width-1."""
    E0 = E[0]
    if kq == 0:
        inv = 1.0 / (E0 + m)
        return [(i - 1) * (pot.wcoef(i) - pot.vcoef(i)) * inv for i in range(width)]
    inv = -1.0 / (E0 + m)
    row = []
    for i in range(width):
        terms = []
        for j in range(kq):
            idx = j + i - kq
            if idx >= 0:
                terms.append(Q[j][idx] * E[kq - j])
        Qprev = Q[kq - 1]
        terms += [Qprev[j] * (pot.wcoef(i - j) - pot.vcoef(i - j)) for j in range(i + 1)]
        row.append(inv * math.fsum(terms))
    return row


def _require_rows(k, tables):
    if k < 1:
        raise ValueError(f"order k must be >= 1, got {k!r}")
    if len(tables.R) < k:
        raise ValueError(f"rows 0..{k - 1} must be built before order {k}")
    if len(tables.Q) < k:
        raise ValueError(f"Q rows 0..{k - 1} must be built before order {k}")
    if len(tables.E) < k:
        raise ValueError(f"corrections E[0..{k - 1}] must be known before order {k}")


def energy_correction(k: int, tables: LaurentTables, pot: PotentialSpec) -> float:
    """Order-k correction from the closed eigenvalue recursion.

    Needs rows R[1..k-1], Q[0..k-1] and E[0..k-1]; the order-k row entries
    it depends on (subscripts below k) are recomputed internally, so the
    stored tables are never mutated.
    """
    _require_rows(k, tables)
    R, Q, E = tables.R, tables.Q, tables.E
    chi, m = tables.chi, tables.m
    R00 = R[0][0]
    scale = -0.5 / R00

    # entries R[k][0..k-1]; these do not involve E[k]
    head = [scale * _bracket(k, i, R, Q, E[:k] + [0.0], pot, chi, m) for i in range(k)]
    R10 = R[1][0] if k >= 2 else head[0]

    t1 = []
    for j in range(2, k):
        Rj = R[j]
        Rk1j = R[k + 1 - j]
        t1 += [Rj[p] * Rk1j[k - p] for p in range(k + 1)]
    if k >= 2:
        R1 = R[1]
        t1 += [2.0 * R1[p] * head[k - p] for p in range(1, k + 1)]
    for j in range(k):
        Qj = Q[j]
        row = R[k - 1 - j]
        t1 += [-(Qj[p] * row[k - p]) for p in range(k + 1)]
    if k == 1:
        # the order-2 self-convolution contributes both cross terms
        t1.append(2.0 * (pot.vcoef(0) * pot.vcoef(1) - pot.wcoef(0) * pot.wcoef(1)))
    if k >= 2:
        t1.append(-chi * Q[k - 2][k])
    S1 = math.fsum(t1)

    t2 = [R[k - 1][k]]
    for j in range(1, k):
        Rj = R[j]
        Rkj = R[k - j]
        t2 += [Rj[p] * Rkj[k - p] for p in range(k + 1)]
    for j in range(k - 1):
        Qj = Q[j]
        row = R[k - 2 - j]
        t2 += [-(Qj[p] * row[k - p]) for p in range(k + 1)]
    t2 += [E[j] * E[k - j] for j in range(1, k)]
    t2.append(-2.0 * E[k - 1] * pot.vcoef(1))
    if k == 2:
        t2 += [
            pot.vcoef(p) * pot.vcoef(2 - p) - pot.wcoef(p) * pot.wcoef(2 - p)
            for p in range(3)
        ]
    if k == 1:
        t2.append(-2.0 * m * pot.wcoef(1))
    if k >= 3:
        t2.append(-chi * Q[k - 3][k])
    S2 = math.fsum(t2)

    den = 2.0 * (E[0] * R10 + pot.vcoef(0) * R00)
    if den == 0.0:
        raise DegenerateQuantizationError(f"vanishing quantization denominator at order {k}")
    return (R00 * S1 - R10 * S2) / den


def quantization_solve(k: int, tables: LaurentTables, pot: PotentialSpec) -> float:
    """Order-k correction solved directly from the vanishing next-order residue.

    Treats E[k] as an unknown, propagates a (value, slope) pair through the
    candidate order-k row and the order-(k+1) balance at the residue slot,
    and solves the resulting linear equation.  Independent of
    `energy_correction` apart from the shared order-k balance.
    """
    _require_rows(k, tables)
    R, Q, E = tables.R, tables.Q, tables.E
    chi, m = tables.chi, tables.m
    R00 = R[0][0]
    scale = -0.5 / R00
    width = len(R[0])

    unknown = _Linear(0.0, 1.0)
    Ex = E[:k] + [unknown]
    rows = R[:k]
    candidate = []
    for i in range(width):
        b = _bracket(k, i, rows, Q, Ex, pot, chi, m)
        candidate.append(b * scale)
    res = _bracket(k + 1, k, rows + [candidate], Q, Ex, pot, chi, m) * scale
    if not isinstance(res, _Linear) or res.slp == 0.0:
        raise DegenerateQuantizationError(
            f"quantization condition at order {k} does not involve E[{k}]"
        )
    return -res.val / res.slp


def build_tables(
    pot: PotentialSpec,
    q: QuantumNumbers,
    m: float,
    K: int,
    *,
    residue_rtol: float = RESIDUE_RTOL,
    n_rtol: float = N_RTOL,
) -> LaurentTables:
    """Fill the coefficient tables and corrections through order K.

    Per order: the channel-mixing row of the previous order first (it needs
    only E[<k]), then E[k], then the order-k row.  After each order the
    next-order residue is re-evaluated with the accepted E[k] and must
    vanish within tolerance.
    """
    if not isinstance(K, int) or K < 0:
        raise ValueError(f"order K must be a non-negative integer, got {K!r}")
    if K > pot.truncation_order and not pot.exact_beyond_truncation:
        raise ValueError(
            f"series truncated at order {pot.truncation_order} cannot support K = {K}; "
            "rebuild the potential with at least K+1 coefficients"
        )
    V0 = pot.vcoef(0)
    W0 = pot.wcoef(0)
    N = principal_N(q, V0, W0)
    E0 = compute_E0(q, V0, W0, m)
    if abs(E0) >= m:
        raise DegenerateStateError(
            f"E0 = {E0:g} sits at the continuum edge; the recursion prefactor vanishes"
        )
    R00 = -math.sqrt((m - E0) * (m + E0))
    width = K + 1
    tables = LaurentTables(
        R=[[R00] + [0.0] * K],
        Q=[],
        E=[E0],
        N=N,
        m=m,
        chi=q.chi,
    )
    scale = -0.5 / R00

    r10 = scale * _bracket(1, 0, tables.R, tables.Q, tables.E, pot, q.chi, m)
    if abs(r10 - N) > n_rtol * N:
        raise ConsistencyError(
            f"first residue {r10!r} differs from N = {N!r}", order=0, residual=r10 - N
        )

    for k in range(1, K + 1):
        tables.Q.append(_q_row_entries(k - 1, width, tables.Q, tables.E, pot, m))
        ek = energy_correction(k, tables, pot)
        if not math.isfinite(ek):
            raise ConsistencyError(f"non-finite correction at order {k}", order=k)
        tables.E.append(ek)
        row = [
            scale * _bracket(k, i, tables.R, tables.Q, tables.E, pot, q.chi, m)
            for i in range(width)
        ]
        tables.R.append(row)
        res = scale * _bracket(k + 1, k, tables.R, tables.Q, tables.E, pot, q.chi, m)
        tables.residues.append(res)
        if abs(res) > residue_rtol * (1.0 + abs(N * R00)):
            raise ConsistencyError(
                f"residue {res:g} at order {k} exceeds tolerance", order=k, residual=res
            )
    return tables


def energy_series(
    pot: PotentialSpec,
    q: QuantumNumbers,
    m: float,
    K: int,
    *,
    residue_rtol: float = RESIDUE_RTOL,
) -> EnergySeries:
    """Corrections E[0..K] with both computation routes run and compared.

    The dual-path residual max_k |solve - recursion| / max(1, |E_k|) is
    attached as a diagnostic; callers decide how strictly to gate on it.
    """
    tables = build_tables(pot, q, m, K, residue_rtol=residue_rtol)
    max_resid = 0.0
    for k in range(1, K + 1):
        alt = quantization_solve(k, tables, pot)
        resid = abs(alt - tables.E[k]) / max(1.0, abs(tables.E[k]))
        if resid > max_resid:
            max_resid = resid
    return EnergySeries(
        corrections=tuple(tables.E),
        m=m,
        state=q,
        potential_id=pot.describe(),
        order=K,
        max_dual_residual=max_resid,
    )
