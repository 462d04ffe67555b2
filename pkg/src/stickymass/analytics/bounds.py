"""Minimax risk bounds as functions of ``(n, alpha)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from stickymass.analytics._numeric import check_alpha
from stickymass.analytics.mse import exact_bias, exact_mse
from stickymass.distributions import DiscreteDistribution

ALPHA_CAP = 1.0 - 1e-9


def lower_bound(n: int, alpha: float) -> float:
    """Le Cam lower bound on the minimax squared-error risk.

    ``(1/32) / (1 + (n-1)(1-alpha)) - (1 - (1-alpha)/2)^(n-1)``. Negative
    (vacuous) for very small ``n``. ``alpha`` is capped just below one.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    alpha = min(alpha, ALPHA_CAP)
    b = 1.0 - alpha
    return (1.0 / 32.0) / (1.0 + (n - 1) * b) - (1.0 - 0.5 * b) ** (n - 1)


def upper_bound_leading(n: int, alpha: float) -> float:
    """Explicit part of the worst-case MSE bound for known alpha.

    ``(3 + (1 + 1/n)/(1-alpha)) / ((n-2)(1-alpha))``. The bound it was taken
    from also carries an O(1/n) remainder with no stated constant; that part
    is not included.
    """
    check_alpha(alpha)
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    b = 1.0 - alpha
    return (3.0 + (1.0 + 1.0 / n) / b) / ((n - 2) * b)


@dataclass(frozen=True)
class BoundReport:
    n: int
    alpha: float
    lower: float
    upper_leading: float
    exact_mse: Optional[float] = None
    exact_bias: Optional[float] = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "lower_bound": self.lower,
            "upper_bound_leading": self.upper_leading,
            "exact_mse": self.exact_mse,
            "exact_bias": self.exact_bias,
        }


def bound_report(n: int, alpha: float, dist: Optional[DiscreteDistribution] = None, **mse_kw) -> BoundReport:
    mse = bias = None
    if dist is not None:
        mse = exact_mse(dist, alpha, n, **mse_kw)
        bias = exact_bias(dist, alpha, n)
    return BoundReport(n, alpha, lower_bound(n, alpha), upper_bound_leading(n, alpha), mse, bias)
