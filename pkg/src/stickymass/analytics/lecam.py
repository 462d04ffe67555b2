"""Two-point Le Cam lower bound for estimating a sample-dependent quantity."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from stickymass.analytics._numeric import check_alpha
from stickymass.analytics.divergence import tv_bound

# L = e^n overflows any integer width; the bound only improves with L and
# n / 2L is already below 1e-16 here for every sane n.
L_CAP = 2**62


def lecam_generic(delta: float, affinity: float, eps1: float, eps2: float, Delta: float = 1.0) -> float:
    """``delta * affinity - (eps1 + eps2) * Delta``."""
    if min(delta, affinity, eps1, eps2, Delta) < 0:
        raise ValueError("Le Cam inputs must be nonnegative")
    if affinity > 1:
        raise ValueError(f"affinity must be <= 1, got {affinity}")
    return delta * affinity - (eps1 + eps2) * Delta


def epsilon_probs(beta: float, alpha: float, n: int):
    """Probabilities that letter 1 never shows up under ``p(0, L)`` and ``p(beta, L)``.

    These are the containment failure probabilities of the two missing-mass
    intervals.
    """
    if not 0 <= beta < 0.5:
        raise ValueError(f"beta must lie in [0, 0.5), got {beta}")
    check_alpha(alpha)
    b = 1.0 - alpha
    eps1 = 0.5 * (1.0 - 0.5 * b) ** (n - 1)
    eps2 = (0.5 - beta) * (1.0 - b * (0.5 + beta)) ** (n - 1)
    return eps1, eps2


def optimal_beta(n: int, alpha: float) -> float:
    return 1.0 / (2.0 * math.sqrt(2.0)) / math.sqrt(1.0 + 0.5 * (n - 1) * (1.0 - alpha))


@dataclass(frozen=True)
class LeCamConfig:
    """Two-point construction ``p(0, L)`` vs ``p(beta, L)`` at sample size ``n``.

    ``delta`` is half the squared gap between the two missing-mass intervals,
    ``eps1``/``eps2`` the chances the missing mass escapes its interval, and
    ``Delta`` the diameter of [0, 1] under squared distance.
    """

    beta: float
    L: int
    alpha: float
    n: int
    Delta: float = 1.0
    delta: float = field(init=False)
    eps1: float = field(init=False)
    eps2: float = field(init=False)

    def __post_init__(self):
        check_alpha(self.alpha)
        if self.L < 1 or self.n < 1:
            raise ValueError("L and n must be positive")
        gap = self.n / (2.0 * self.L)
        if not gap <= self.beta < 0.5:
            raise ValueError(f"beta must lie in [n/(2L), 0.5) = [{gap}, 0.5), got {self.beta}")
        e1, e2 = epsilon_probs(self.beta, self.alpha, self.n)
        object.__setattr__(self, "delta", 0.5 * (self.beta - gap) ** 2)
        object.__setattr__(self, "eps1", e1)
        object.__setattr__(self, "eps2", e2)

    @classmethod
    def optimized(cls, n: int, alpha: float, L: int = L_CAP) -> "LeCamConfig":
        return cls(beta=optimal_beta(n, alpha), L=L, alpha=alpha, n=n)

    @property
    def affinity_lower(self) -> float:
        """``1 - tv_bound``; a lower bound on the affinity of the two laws."""
        return 1.0 - tv_bound(self.beta, self.alpha, self.n)


def lecam_bound(config: LeCamConfig) -> float:
    """Relaxed Le Cam bound for the two-point construction.

    ``0.5 (beta - n/2L)^2 (1 - TVbound) - (1 - (1-alpha)/2)^(n-1)``, where the
    last term dominates ``eps1 + eps2``.
    """
    penalty = (1.0 - 0.5 * (1.0 - config.alpha)) ** (config.n - 1)
    return config.delta * config.affinity_lower - penalty


def lecam_bound_tight(config: LeCamConfig) -> float:
    """Same construction but charging the exact ``eps1 + eps2``."""
    return lecam_generic(config.delta, max(config.affinity_lower, 0.0), config.eps1, config.eps2, config.Delta)


def expectation_gap_bound(g1, g2, probs, eps: float) -> tuple:
    """Both sides of ``E[g1] >= E[g2] - eps * sup g2``.

    Valid whenever ``g1, g2 >= 0`` and ``Pr(g1 >= g2) >= 1 - eps``. Returns
    ``(E[g1], E[g2] - eps * sup g2)``.
    """
    g1 = np.asarray(g1, dtype=float)
    g2 = np.asarray(g2, dtype=float)
    probs = np.asarray(probs, dtype=float)
    lhs = math.fsum(probs * g1)
    rhs = math.fsum(probs * g2) - eps * float(np.max(g2))
    return lhs, rhs
