"""KL and total-variation tools for sticky Markov chains.

All divergences are in nats. ``0 * log(0/q)`` counts as zero and a positive
mass against a zero mass yields ``math.inf`` instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from stickymass.analytics._numeric import check_alpha


def kl_divergence(p, q) -> float:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError(f"shape mismatch {p.shape} vs {q.shape}")
    pos = p > 0
    if np.any(q[pos] <= 0):
        return math.inf
    return math.fsum(p[pos] * np.log(p[pos] / q[pos]))


def markov_kl(P1, p1, P2, p2, n: int) -> float:
    """KL between the length-``n`` laws of two stationary chains.

    Decomposes as ``D(p1 || p2) + (n - 1) * sum_x p1[x] D(P1[x] || P2[x])``,
    which requires each chain to start from its stationary law.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    P1 = np.asarray(P1, dtype=float)
    P2 = np.asarray(P2, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    head = kl_divergence(p1, p2)
    if n == 1 or math.isinf(head):
        return head
    rows = []
    for x in np.flatnonzero(p1 > 0):
        d = kl_divergence(P1[x], P2[x])
        if math.isinf(d):
            return math.inf
        rows.append(p1[x] * d)
    return head + (n - 1) * math.fsum(rows)


@dataclass(frozen=True)
class TwoPointKL:
    """KL pieces between the chains driven by ``p(0, L)`` and ``p(gamma, L)``."""

    stationary_kl: float
    row1_kl: float
    row_other_kl: float

    def chain_kl(self, n: int) -> float:
        # p(0, L) puts 1/2 on letter 1 and 1/2 spread over the L identical tail rows
        return self.stationary_kl + (n - 1) * 0.5 * (self.row1_kl + self.row_other_kl)


def two_point_kl_terms(gamma: float, L: int, alpha: float) -> TwoPointKL:
    """Closed-form KL terms for the two-point pair ``p(0, L)`` vs ``p(gamma, L)``.

    ``row_other_kl`` is the row of any tail letter ``x >= 2``; all tail rows
    coincide by symmetry.
    """
    if not 0 <= gamma < 0.5:
        raise ValueError(f"gamma must lie in [0, 0.5), got {gamma}")
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    check_alpha(alpha)
    a, b, g = alpha, 1.0 - alpha, gamma

    stationary = -0.5 * math.log1p(-4 * g * g)
    row1 = -0.5 * (1 + a) * math.log1p(2 * g * b / (1 + a)) - 0.5 * b * math.log1p(-2 * g)

    # tail row: head letter, L-1 other tail letters, and the self-transition
    stay = 2 * L * a + b
    to_head = -0.5 * b * math.log1p(2 * g)
    to_tail = -b * (L - 1) / (2 * L) * math.log1p(-2 * g)
    to_self = (stay / (2 * L)) * -math.log1p(-2 * g * b / stay)
    return TwoPointKL(stationary, row1, to_head + to_tail + to_self)


def row_kl_bound(gamma: float, alpha: float) -> float:
    """Common upper bound ``-(1-alpha)/2 * ln(1 - 4 gamma^2)`` on every row KL."""
    return -0.5 * (1.0 - alpha) * math.log1p(-4 * gamma * gamma)


def two_point_chain_kl(gamma: float, L: int, alpha: float, n: int) -> float:
    return two_point_kl_terms(gamma, L, alpha).chain_kl(n)


def pinsker_tv(kl: float) -> float:
    """Total-variation upper bound ``sqrt(KL / 2)``."""
    return math.sqrt(kl / 2.0)


def tv_bound(beta: float, alpha: float, n: int) -> float:
    """``sqrt(2) * beta * sqrt(1 + (n-1)(1-alpha)/2)``.

    Bounds the TV distance between the ``p(0, L)`` and ``p(beta, L)`` sequence
    laws, uniformly in ``L``.
    """
    if not 0 <= beta < 0.5:
        raise ValueError(f"beta must lie in [0, 0.5), got {beta}")
    return math.sqrt(2.0) * beta * math.sqrt(1.0 + 0.5 * (n - 1) * (1.0 - alpha))
