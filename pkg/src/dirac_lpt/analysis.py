"""Partial-sum diagnostics for the divergent correction series.

The running binding energies B[k] = m - sum_{j<=k} E_j split into an even
and an odd subsequence that approach the true eigenvalue from opposite
sides; the point of closest approach of consecutive sums gives a bracketed
estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .engine import EnergySeries


@dataclass
class SumSequence:
    """Binding partial sums with parity split and (optional) bracket data."""

    binding_sums: list
    even_indices: list
    odd_indices: list
    estimate: Optional[float] = None
    gap: Optional[float] = None
    k_star: Optional[int] = None
    monotone_warning: Optional[bool] = None


def partial_sums(series: EnergySeries) -> SumSequence:
    """Binding partial sums B[k] = m - (E_0 + ... + E_k), exactly rounded."""
    K = series.order
    sums = [series.m - math.fsum(series.corrections[: k + 1]) for k in range(K + 1)]
    return SumSequence(
        binding_sums=sums,
        even_indices=[k for k in range(K + 1) if k % 2 == 0],
        odd_indices=[k for k in range(K + 1) if k % 2 == 1],
    )


def bracket_estimate(seq: SumSequence):
    """Estimate from the closest pair of consecutive partial sums.

    k_star minimises |B[k] - B[k-1]| over k >= 2 (the first index at which
    both subsequences are past their initial transient); the estimate is
    the midpoint of that pair and the gap its width.  A violation of the
    two-sided monotone approach (even sums decreasing, odd increasing,
    from k >= 2) sets a warning flag rather than raising.
    """
    B = seq.binding_sums
    if len(B) < 4:
        raise ValueError(f"need at least 4 partial sums, got {len(B)}")
    diffs = [abs(B[k] - B[k - 1]) for k in range(2, len(B))]
    k_star = 2 + min(range(len(diffs)), key=diffs.__getitem__)
    gap = abs(B[k_star] - B[k_star - 1])
    estimate = 0.5 * (B[k_star] + B[k_star - 1])

    evens = [B[k] for k in seq.even_indices if k >= 2]
    odds = [B[k] for k in seq.odd_indices if k >= 2]
    monotone = all(x > y for x, y in zip(evens, evens[1:])) and all(
        x < y for x, y in zip(odds, odds[1:])
    )
    seq.estimate = estimate
    seq.gap = gap
    seq.k_star = k_star
    seq.monotone_warning = not monotone
    return estimate, gap, k_star
