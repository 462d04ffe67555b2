"""Occupancy statistics of an observed sequence."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict

import numpy as np

from stickymass.channel import SequenceLike, as_letters
from stickymass.distributions import DiscreteDistribution


@dataclass(frozen=True)
class OccupancyCounts:
    """Per-letter counts ``N_x`` and the profile ``phi_l = #{x : N_x = l}``.

    Only observed letters are stored, so the footprint is O(n) even when the
    alphabet is much larger than the sample.
    """

    counts: Dict[int, int]
    phi: Dict[int, int]

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    def phi_l(self, level: int) -> int:
        return self.phi.get(level, 0)

    def count(self, letter) -> int:
        return self.counts.get(letter, 0)


def counts(seq: SequenceLike) -> OccupancyCounts:
    letters = as_letters(seq)
    if letters.size == 0:
        raise ValueError("sequence is empty")
    c = Counter(letters.tolist())
    return OccupancyCounts(counts=dict(c), phi=dict(Counter(c.values())))


def missing_mass(seq: SequenceLike, dist: DiscreteDistribution) -> float:
    """Total mass of letters that never appear in ``seq``."""
    seen = np.unique(as_letters(seq))
    if seen.size and (seen[0] < 1 or seen[-1] > dist.K):
        raise ValueError(f"sequence has letters outside 1..{dist.K}")
    m = 1.0 - math.fsum(dist.probs[seen - 1])
    return max(m, 0.0)


def missing_mass_direct(seq: SequenceLike, dist: DiscreteDistribution) -> float:
    """Sum over absent letters; O(K), kept for cross-checking."""
    present = np.zeros(dist.K, dtype=bool)
    present[as_letters(seq) - 1] = True
    return math.fsum(dist.probs[~present])


def phi1_interior(seq: SequenceLike) -> int:
    """Letters seen exactly once in ``X_2..X_{n-1}`` and at neither endpoint."""
    letters = as_letters(seq)
    if letters.size < 3:
        raise ValueError(f"interior singletons need n >= 3, got n={letters.size}")
    uniq, cnt = np.unique(letters[1:-1], return_counts=True)
    singles = uniq[cnt == 1]
    keep = (singles != letters[0]) & (singles != letters[-1])
    return int(np.count_nonzero(keep))


def state_changes(seq: SequenceLike) -> int:
    letters = as_letters(seq)
    if letters.size == 0:
        raise ValueError("sequence is empty")
    return int(np.count_nonzero(letters[1:] != letters[:-1]))
