"""Discrete input distributions on the alphabet {1, ..., K}.

Letters are 1-based throughout the package, so a distribution with ``K``
letters produces samples in ``1..K``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

SUM_TOL = 1e-12


@dataclass(frozen=True)
class DiscreteDistribution:
    """Immutable probability vector over letters ``1..K``.

    Parameters
    ----------
    probs : array_like
        Nonnegative masses summing to one (absolute tolerance 1e-12).
        Zero-mass letters are allowed; they are never sampled.
    """

    probs: np.ndarray
    _cdf: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = np.array(self.probs, dtype=float).ravel()
        if p.size == 0:
            raise ValueError("distribution needs at least one letter")
        if not np.all(np.isfinite(p)) or np.any(p < 0):
            raise ValueError("probabilities must be finite and nonnegative")
        total = math.fsum(p)
        if abs(total - 1.0) > SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

        cdf = np.cumsum(p)
        # Pin the top of the cdf to 1 from the last positive letter on, so a
        # uniform draw in [0, 1) can't land on trailing zero-mass letters.
        last = int(np.flatnonzero(p > 0)[-1])
        cdf[last:] = 1.0
        cdf.setflags(write=False)
        object.__setattr__(self, "_cdf", cdf)

    @property
    def K(self) -> int:
        return int(self.probs.size)

    @property
    def cdf(self) -> np.ndarray:
        return self._cdf

    def __len__(self) -> int:
        return self.K

    def __eq__(self, other):
        if not isinstance(other, DiscreteDistribution):
            return NotImplemented
        return self.K == other.K and bool(np.array_equal(self.probs, other.probs))

    def __hash__(self):
        return hash(self.probs.tobytes())

    def mass(self, letter: int) -> float:
        """Probability of a 1-based letter."""
        return float(self.probs[letter - 1])

    def sample(self, size: int, rng: np.random.Generator) -> np.ndarray:
        """Draw ``size`` i.i.d. letters (1-based) by inverse-cdf lookup."""
        u = rng.random(size)
        return np.searchsorted(self._cdf, u, side="right") + 1


def _normalized(weights: np.ndarray) -> np.ndarray:
    # fsum keeps the sum-to-one invariant at 1e-12 for K ~ 1e4
    return weights / math.fsum(weights)


def power_law(K: int, s: float) -> DiscreteDistribution:
    """Power law ``p_i ∝ i^(-s)`` on ``1..K``."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if s < 0:
        raise ValueError(f"exponent s must be >= 0, got {s}")
    if s == 0:
        return uniform(K)
    w = np.arange(1, K + 1, dtype=float) ** (-float(s))
    return DiscreteDistribution(_normalized(w))


def uniform(K: int) -> DiscreteDistribution:
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    return DiscreteDistribution(np.full(K, 1.0 / K))


def nearly_power_law(K: int, p1: float, s: float) -> DiscreteDistribution:
    """Head mass ``p1`` on letter 1 and a power law tail on ``2..K``.

    The tail carries ``1 - p1`` split as ``i^(-s)`` for ``i = 2..K``.
    """
    if K < 2:
        raise ValueError(f"K must be >= 2, got {K}")
    if not 0 < p1 < 1:
        raise ValueError(f"p1 must lie in (0, 1), got {p1}")
    if s < 0:
        raise ValueError(f"exponent s must be >= 0, got {s}")
    w = np.arange(2, K + 1, dtype=float) ** (-float(s))
    tail = (1.0 - p1) * _normalized(w)
    return DiscreteDistribution(np.concatenate(([p1], tail)))


@dataclass(frozen=True)
class TwoPointFamily:
    """Member ``gamma`` of the two-level family with ``L`` tail letters.

    Letter 1 has mass ``0.5 + gamma``; letters ``2..L+1`` share ``0.5 - gamma``
    equally.
    """

    gamma: float
    L: int

    def __post_init__(self):
        if not 0 <= self.gamma < 0.5:
            raise ValueError(f"gamma must lie in [0, 0.5), got {self.gamma}")
        if self.L < 1:
            raise ValueError(f"L must be >= 1, got {self.L}")

    @property
    def head(self) -> float:
        return 0.5 + self.gamma

    @property
    def tail(self) -> float:
        """Mass of each single tail letter."""
        return (0.5 - self.gamma) / self.L

    def materialize(self) -> DiscreteDistribution:
        p = np.empty(self.L + 1)
        p[0] = self.head
        p[1:] = self.tail
        return DiscreteDistribution(p)


def two_point(gamma: float, L: int) -> DiscreteDistribution:
    return TwoPointFamily(gamma, L).materialize()


def explicit(probs: Sequence[float]) -> DiscreteDistribution:
    return DiscreteDistribution(np.asarray(probs, dtype=float))


def sample_letter(dist: DiscreteDistribution, rng: np.random.Generator) -> int:
    """Single inverse-cdf draw; O(log K)."""
    return int(np.searchsorted(dist.cdf, rng.random(), side="right")) + 1


def resolve_alphabet_size(token: str, n: Optional[int]) -> int:
    """Turn a K token into an integer; ``<c>n`` means ``ceil(c * n)``."""
    token = token.strip()
    if token.endswith("n"):
        if n is None:
            raise ValueError(f"alphabet size {token!r} needs a sample size n")
        coef = token[:-1] or "1"
        # exact decimal product so 1.2 * 100 resolves to 120, not 121
        return math.ceil(Fraction(coef) * n)
    return int(token)


def parse_dist_spec(spec: str, n: Optional[int] = None) -> DiscreteDistribution:
    """Build a distribution from a spec string.

    Grammar::

        powerlaw:K,s
        uniform:K
        nearly:K,p1,s
        twopoint:gamma,L
        explicit:p1,p2,...

    ``K`` may be written relative to the sample size, e.g. ``1.2n``, in which
    case it is resolved to ``ceil(1.2 * n)``.
    """
    kind, sep, body = spec.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise ValueError(f"distribution spec {spec!r} is missing ':'")
    args = [a.strip() for a in body.split(",") if a.strip()]

    def need(count):
        if len(args) != count:
            raise ValueError(f"{kind} expects {count} arguments, got {len(args)} in {spec!r}")

    if kind == "powerlaw":
        need(2)
        return power_law(resolve_alphabet_size(args[0], n), float(args[1]))
    if kind == "uniform":
        need(1)
        return uniform(resolve_alphabet_size(args[0], n))
    if kind == "nearly":
        need(3)
        return nearly_power_law(resolve_alphabet_size(args[0], n), float(args[1]), float(args[2]))
    if kind == "twopoint":
        need(2)
        return two_point(float(args[0]), int(args[1]))
    if kind == "explicit":
        if not args:
            raise ValueError("explicit spec needs at least one probability")
        return explicit([float(a) for a in args])
    raise ValueError(f"unknown distribution kind {kind!r} in {spec!r}")


def spec_depends_on_n(spec: str) -> bool:
    kind, _, body = spec.partition(":")
    if kind.strip().lower() not in ("powerlaw", "uniform", "nearly"):
        return False
    first = body.split(",")[0].strip()
    return first.endswith("n")
