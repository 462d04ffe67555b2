"""Closed-form probabilities, exact risk, bounds and divergences."""

from stickymass.analytics.bounds import BoundReport, bound_report, lower_bound, upper_bound_leading
from stickymass.analytics.divergence import (
    TwoPointKL,
    kl_divergence,
    markov_kl,
    pinsker_tv,
    row_kl_bound,
    tv_bound,
    two_point_chain_kl,
    two_point_kl_terms,
)
from stickymass.analytics.lecam import (
    LeCamConfig,
    epsilon_probs,
    expectation_gap_bound,
    lecam_bound,
    lecam_bound_tight,
    lecam_generic,
    optimal_beta,
)
from stickymass.analytics.mse import (
    MseTerms,
    exact_bias,
    exact_mse,
    expected_missing_mass,
    mse_terms,
    term_bounds,
)
from stickymass.analytics.probabilities import q_x0, q_x1, q_xy00, q_xy01, q_xy10, q_xy11, t_xy

__all__ = [
    "BoundReport",
    "LeCamConfig",
    "MseTerms",
    "TwoPointKL",
    "bound_report",
    "epsilon_probs",
    "exact_bias",
    "exact_mse",
    "expectation_gap_bound",
    "expected_missing_mass",
    "kl_divergence",
    "lecam_bound",
    "lecam_bound_tight",
    "lecam_generic",
    "lower_bound",
    "markov_kl",
    "mse_terms",
    "optimal_beta",
    "pinsker_tv",
    "q_x0",
    "q_x1",
    "q_xy00",
    "q_xy01",
    "q_xy10",
    "q_xy11",
    "row_kl_bound",
    "t_xy",
    "term_bounds",
    "tv_bound",
    "two_point_chain_kl",
    "two_point_kl_terms",
    "upper_bound_leading",
]
