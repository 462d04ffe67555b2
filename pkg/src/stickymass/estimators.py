"""Good-Turing style estimators of the missing mass and a stickiness estimator."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from stickymass.channel import SequenceLike, as_letters
from stickymass.stats import counts, phi1_interior, state_changes


class AlphaSource(str, Enum):
    KNOWN = "known"
    ESTIMATED = "estimated"


@dataclass(frozen=True)
class EstimateReport:
    """A missing-mass estimate together with the stickiness used to form it.

    ``estimate`` is not clipped to [0, 1]; the sticky correction can push it
    above one for small samples and large ``alpha``.
    """

    estimate: float
    alpha_used: float
    alpha_source: AlphaSource = AlphaSource.KNOWN

    def clipped(self) -> float:
        return min(max(self.estimate, 0.0), 1.0)


def good_turing(seq: SequenceLike) -> EstimateReport:
    """Classical ``phi_1 / n``."""
    occ = counts(seq)
    return EstimateReport(occ.phi_l(1) / occ.n, 0.0, AlphaSource.KNOWN)


def modified_good_turing_value(phi1_int: int, n: int, alpha: float) -> float:
    return phi1_int / ((1.0 - alpha) ** 2 * (n - 2))


def modified_good_turing(
    seq: SequenceLike, alpha: float, source: AlphaSource = AlphaSource.KNOWN
) -> EstimateReport:
    """Interior singletons normalized by ``(1 - alpha)^2 (n - 2)``."""
    n = as_letters(seq).size
    if n < 3:
        raise ValueError(f"modified Good-Turing needs n >= 3, got n={n}")
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    return EstimateReport(modified_good_turing_value(phi1_interior(seq), n, alpha), alpha, AlphaSource(source))


def alpha_from_changes(tau: int, n: int) -> float:
    """``1 - (tau + 1)/n`` clamped to ``[0, 1 - 1/n]``."""
    raw = 1.0 - (tau + 1) / n
    return min(max(raw, 0.0), 1.0 - 1.0 / n)


def estimate_alpha(seq: SequenceLike) -> float:
    letters = as_letters(seq)
    return alpha_from_changes(state_changes(letters), letters.size)


def modified_good_turing_auto(seq: SequenceLike) -> EstimateReport:
    """Modified Good-Turing with ``alpha`` replaced by its state-change estimate."""
    return modified_good_turing(seq, estimate_alpha(seq), AlphaSource.ESTIMATED)
