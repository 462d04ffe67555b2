"""Geometric sticky channel: simulators and transition matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from stickymass.distributions import DiscreteDistribution
from stickymass.errors import ResourceLimitError

DENSE_MATRIX_MAX_K = 4096


@dataclass(frozen=True)
class ChannelParams:
    """Stickiness ``alpha``: probability that an output repeats its predecessor."""

    alpha: float

    def __post_init__(self):
        if not 0 <= self.alpha < 1:
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha}")

    @property
    def mean_run_length(self) -> float:
        return 1.0 / (1.0 - self.alpha)


@dataclass(frozen=True, eq=False)
class SampleSequence:
    """Observed channel output ``X_1..X_n`` as 1-based letters."""

    letters: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.letters)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a sample sequence must be a nonempty 1-d array")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "letters", arr)

    @property
    def n(self) -> int:
        return int(self.letters.size)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.letters.tolist())

    def __eq__(self, other):
        if isinstance(other, SampleSequence):
            return bool(np.array_equal(self.letters, other.letters))
        return NotImplemented

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.letters, dtype=dtype)


SequenceLike = Union[SampleSequence, np.ndarray, Iterable]


def as_letters(seq: SequenceLike) -> np.ndarray:
    if isinstance(seq, SampleSequence):
        return seq.letters
    return np.asarray(list(seq) if not isinstance(seq, np.ndarray) else seq)


def _params(params) -> ChannelParams:
    return params if isinstance(params, ChannelParams) else ChannelParams(float(params))


def simulate_markov(
    dist: DiscreteDistribution, params: ChannelParams, n: int, rng: np.random.Generator
) -> SampleSequence:
    """Generate ``n`` outputs via the Markov recursion.

    ``X_1`` is a fresh draw; each later ``X_i`` copies ``X_{i-1}`` with
    probability ``alpha`` and is a fresh draw otherwise.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    params = _params(params)
    fresh = dist.sample(n, rng)
    stick = rng.random(n) < params.alpha
    stick[0] = False
    # forward-fill: each position takes the fresh draw of its latest non-sticky index
    src = np.where(stick, 0, np.arange(n))
    np.maximum.accumulate(src, out=src)
    return SampleSequence(fresh[src])


def simulate_repeats(
    dist: DiscreteDistribution, params: ChannelParams, n: int, rng: np.random.Generator
) -> SampleSequence:
    """Repeat i.i.d. inputs ``Geo(1 - alpha)`` times each, truncated to ``n``.

    The tail of the final repeat block is discarded.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    params = _params(params)
    out = np.empty(n, dtype=np.int64)
    filled = 0
    while filled < n:
        # Every repeat count is >= 1, so n blocks always suffice.
        need = n - filled
        inputs = dist.sample(need, rng)
        reps = rng.geometric(1.0 - params.alpha, size=need)
        block = np.repeat(inputs, reps)[:need]
        out[filled : filled + block.size] = block
        filled += block.size
    return SampleSequence(out)


def transition_matrix(
    dist: DiscreteDistribution, params: ChannelParams, max_k: int = DENSE_MATRIX_MAX_K
) -> np.ndarray:
    """Dense ``alpha * I + (1 - alpha) * 1 p`` (rows index the previous letter)."""
    params = _params(params)
    if dist.K > max_k:
        raise ResourceLimitError(
            f"dense transition matrix for K={dist.K} exceeds max_k={max_k}; "
            "use transition_row for an implicit representation"
        )
    a = params.alpha
    P = np.tile((1.0 - a) * dist.probs, (dist.K, 1))
    P[np.diag_indices(dist.K)] += a
    return P


def transition_row(dist: DiscreteDistribution, params: ChannelParams, letter: int) -> np.ndarray:
    """Row ``P(. | letter)`` without materializing the full matrix."""
    params = _params(params)
    row = (1.0 - params.alpha) * dist.probs
    row[letter - 1] += params.alpha
    return row
