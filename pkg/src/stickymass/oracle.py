"""Exhaustive enumeration of sticky-channel sequence laws.

Everything here works from the Markov factorization
``Pr(x^n) = p[x_1] * prod_i P(x_i | x_{i-1})`` over all ``K^n`` sequences,
without touching any closed-form expression. It is the ground truth the
analytics module is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from stickymass.channel import ChannelParams, transition_matrix
from stickymass.distributions import DiscreteDistribution
from stickymass.errors import ResourceLimitError

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True, eq=False)
class SequenceLaw:
    """Probability of every length-``n`` sequence over ``1..K``.

    ``sequences`` is an ``(K^n, n)`` array of 1-based letters in
    lexicographic order and ``probs`` the matching probabilities.
    """

    sequences: np.ndarray
    probs: np.ndarray
    K: int

    @property
    def n(self) -> int:
        return int(self.sequences.shape[1])

    @property
    def size(self) -> int:
        return int(self.probs.size)

    @property
    def entries(self) -> dict:
        return {tuple(s): float(p) for s, p in zip(self.sequences.tolist(), self.probs)}

    def total(self) -> float:
        return math.fsum(self.probs)

    def prob(self, seq) -> float:
        idx = 0
        for letter in seq:
            idx = idx * self.K + (int(letter) - 1)
        return float(self.probs[idx])

    def map(self, fn: Callable) -> np.ndarray:
        """Apply a per-sequence function; slow, for small laws."""
        return np.array([fn(s) for s in self.sequences], dtype=float)


def law_from_chain(p, P, n: int, budget: int = DEFAULT_BUDGET) -> SequenceLaw:
    """Enumerate a stationary chain given its start law ``p`` and matrix ``P``."""
    p = np.asarray(p, dtype=float)
    P = np.asarray(P, dtype=float)
    K = p.size
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = K**n
    if total > budget:
        raise ResourceLimitError(f"enumeration needs K^n = {K}^{n} = {total} sequences, budget is {budget}")
    seqs = np.arange(K).reshape(K, 1)
    probs = p.copy()
    for _ in range(1, n):
        last = seqs[:, -1]
        # child (s, j) follows parent s; lexicographic order is preserved
        probs = (probs[:, None] * P[last, :]).ravel()
        seqs = np.hstack([np.repeat(seqs, K, axis=0), np.tile(np.arange(K), seqs.shape[0])[:, None]])
    return SequenceLaw(sequences=seqs + 1, probs=probs, K=K)


def enumerate_law(
    dist: DiscreteDistribution, alpha: float, n: int, budget: int = DEFAULT_BUDGET
) -> SequenceLaw:
    P = transition_matrix(dist, ChannelParams(alpha))
    return law_from_chain(dist.probs, P, n, budget)


def event_prob(law: SequenceLaw, predicate: Callable, vectorized: bool = False) -> float:
    """Mass of the sequences satisfying ``predicate``.

    With ``vectorized=True`` the predicate receives the whole
    ``(K^n, n)`` sequence array and returns a boolean mask.
    """
    if vectorized:
        mask = np.asarray(predicate(law.sequences), dtype=bool)
    else:
        mask = np.fromiter((bool(predicate(s)) for s in law.sequences), dtype=bool, count=law.size)
    return math.fsum(law.probs[mask])


def occurrences(seqs: np.ndarray, letter: int, interior: bool = False) -> np.ndarray:
    body = seqs[:, 1:-1] if interior else seqs
    return np.count_nonzero(body == letter, axis=1)


def off_ends(seqs: np.ndarray, letter: int) -> np.ndarray:
    return (seqs[:, 0] != letter) & (seqs[:, -1] != letter)


def missing_mass_array(law: SequenceLaw, dist: DiscreteDistribution) -> np.ndarray:
    out = np.zeros(law.size)
    for x in range(1, law.K + 1):
        out += dist.probs[x - 1] * (occurrences(law.sequences, x) == 0)
    return out


def interior_singletons_array(law: SequenceLaw) -> np.ndarray:
    if law.n < 3:
        raise ValueError("interior singletons need n >= 3")
    out = np.zeros(law.size, dtype=np.int64)
    for x in range(1, law.K + 1):
        out += (occurrences(law.sequences, x, interior=True) == 1) & off_ends(law.sequences, x)
    return out


def modified_gt_array(law: SequenceLaw, alpha: float) -> np.ndarray:
    return interior_singletons_array(law) / ((1.0 - alpha) ** 2 * (law.n - 2))


Estimator = Union[Callable, np.ndarray]


def _estimates(law: SequenceLaw, estimator: Estimator) -> np.ndarray:
    if callable(estimator):
        return law.map(estimator)
    est = np.asarray(estimator, dtype=float)
    if est.shape != law.probs.shape:
        raise ValueError("precomputed estimates must have one entry per sequence")
    return est


def brute_mse(law: SequenceLaw, dist: DiscreteDistribution, estimator: Estimator) -> float:
    """Exact ``E[(M_0 - estimate)^2]`` by summing over every sequence.

    ``estimator`` is either a function of one sequence or an array of
    precomputed per-sequence estimates.
    """
    err = missing_mass_array(law, dist) - _estimates(law, estimator)
    return math.fsum(law.probs * err**2)


def brute_bias(law: SequenceLaw, dist: DiscreteDistribution, estimator: Estimator) -> float:
    err = _estimates(law, estimator) - missing_mass_array(law, dist)
    return math.fsum(law.probs * err)


def _aligned(a: SequenceLaw, b: SequenceLaw):
    if a.K != b.K or a.n != b.n:
        raise ValueError(f"laws differ in shape: (K={a.K}, n={a.n}) vs (K={b.K}, n={b.n})")
    return a.probs, b.probs


def brute_tv(a: SequenceLaw, b: SequenceLaw) -> float:
    pa, pb = _aligned(a, b)
    return 0.5 * math.fsum(np.abs(pa - pb))


def brute_kl(a: SequenceLaw, b: SequenceLaw) -> float:
    pa, pb = _aligned(a, b)
    pos = pa > 0
    if np.any(pb[pos] <= 0):
        return math.inf
    return math.fsum(pa[pos] * np.log(pa[pos] / pb[pos]))
