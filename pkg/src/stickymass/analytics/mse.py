"""Exact mean squared error and bias of the modified Good-Turing estimator (known alpha)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from stickymass.analytics._numeric import check_alpha
from stickymass.analytics.probabilities import q_x0, q_x1, t_xy
from stickymass.distributions import DiscreteDistribution
from stickymass.errors import ResourceLimitError

DEFAULT_MAX_DISTINCT = 5000
_ROW_CHUNK = 256


def _mass_groups(dist: DiscreteDistribution):
    """Distinct positive masses and their multiplicities."""
    p = dist.probs[dist.probs > 0]
    return np.unique(p, return_counts=True)


@dataclass(frozen=True)
class MseTerms:
    """The three pieces of the exact squared-error expansion."""

    cross: float
    missing: float
    singleton: float

    @property
    def total(self) -> float:
        return self.cross + self.missing + self.singleton


def mse_terms(
    dist: DiscreteDistribution, alpha: float, n: int, max_distinct: int = DEFAULT_MAX_DISTINCT
) -> MseTerms:
    """Split the exact MSE into cross-letter, missing-letter and singleton sums.

    Letters sharing a mass are grouped, so the double sum costs O(D^2) for
    D distinct masses. A two-point distribution with a million tail letters
    is therefore as cheap as K = 2.
    """
    check_alpha(alpha)
    if n < 5:
        raise ValueError(f"exact MSE closed form needs n >= 5, got n={n}")
    v, c = _mass_groups(dist)
    if v.size > max_distinct:
        raise ResourceLimitError(
            f"{v.size} distinct masses exceeds max_distinct={max_distinct}; "
            "raise the cap to run the O(D^2) sum anyway"
        )
    cf = c.astype(float)
    c1 = (1.0 - alpha) ** 2 * (n - 2)

    missing = math.fsum(cf * v**2 * q_x0(v, alpha, n))
    singleton = math.fsum(cf * np.atleast_1d(q_x1(v, alpha, n))) / c1**2

    partials = []
    for lo in range(0, v.size, _ROW_CHUNK):
        hi = min(lo + _ROW_CHUNK, v.size)
        # ordered pairs of distinct letters: c_a c_b, minus c_a on the diagonal
        w = cf[lo:hi, None] * cf[None, :]
        idx = np.arange(lo, hi)
        w[idx - lo, idx] -= cf[lo:hi]
        live = w > 0
        x = np.broadcast_to(v[lo:hi, None], w.shape)
        y = np.where(live, v[None, :], 0.0)
        t = np.asarray(t_xy(x, y, alpha, n))
        partials.append(float(np.sum(np.where(live, w * t, 0.0))))
    cross = math.fsum(partials)
    return MseTerms(cross=cross, missing=missing, singleton=singleton)


def exact_mse(
    dist: DiscreteDistribution, alpha: float, n: int, max_distinct: int = DEFAULT_MAX_DISTINCT
) -> float:
    return mse_terms(dist, alpha, n, max_distinct).total


def exact_bias(dist: DiscreteDistribution, alpha: float, n: int) -> float:
    """``E[estimate] - E[missing mass]`` for the modified estimator with known alpha."""
    check_alpha(alpha)
    if n < 3:
        raise ValueError(f"exact bias needs n >= 3, got n={n}")
    v, c = _mass_groups(dist)
    cf = c.astype(float)
    c1 = (1.0 - alpha) ** 2 * (n - 2)
    est = math.fsum(cf * np.atleast_1d(q_x1(v, alpha, n))) / c1
    mm = math.fsum(cf * v * np.atleast_1d(q_x0(v, alpha, n)))
    return est - mm


def expected_missing_mass(dist: DiscreteDistribution, alpha: float, n: int) -> float:
    v, c = _mass_groups(dist)
    return math.fsum(c * v * np.atleast_1d(q_x0(v, alpha, n)))


def term_bounds(n: int, alpha: float) -> dict:
    """Distribution-free bounds on the terms of the MSE expansion.

    ``missing`` uses the ``n - 1`` denominator; ``missing_tight`` keeps the
    intermediate ``n + 1`` form, which also holds because
    ``max_q q (1 - q)^n <= 1/(n + 1)``. ``cross_leading`` is only the explicit
    part of the cross-term bound; its lower-order remainder has no stated
    constant.
    """
    check_alpha(alpha)
    b = 1.0 - alpha
    return {
        "missing": 1.0 / (b * (n - 1)),
        "missing_tight": 1.0 / (b * (n + 1)),
        "singleton": 1.0 / (b**2 * (n - 2)),
        "cross_leading": 2.0 / (b * (n - 2)),
    }
