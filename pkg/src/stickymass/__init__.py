"""Missing-mass estimation from geometric sticky channels."""

from stickymass.distributions import (
    DiscreteDistribution,
    TwoPointFamily,
    explicit,
    nearly_power_law,
    parse_dist_spec,
    power_law,
    sample_letter,
    two_point,
    uniform,
)
from stickymass.channel import (
    ChannelParams,
    SampleSequence,
    simulate_markov,
    simulate_repeats,
    transition_matrix,
)
from stickymass.stats import (
    OccupancyCounts,
    counts,
    missing_mass,
    phi1_interior,
    state_changes,
)
from stickymass.estimators import (
    EstimateReport,
    estimate_alpha,
    good_turing,
    modified_good_turing,
    modified_good_turing_auto,
)
from stickymass.harness import ExperimentSpec, MseReport, figdata, run_mse_experiment
from stickymass.errors import ResourceLimitError

__version__ = "0.1.0"

__all__ = [
    "ChannelParams",
    "DiscreteDistribution",
    "EstimateReport",
    "ExperimentSpec",
    "MseReport",
    "OccupancyCounts",
    "ResourceLimitError",
    "SampleSequence",
    "TwoPointFamily",
    "counts",
    "estimate_alpha",
    "explicit",
    "figdata",
    "good_turing",
    "missing_mass",
    "modified_good_turing",
    "modified_good_turing_auto",
    "nearly_power_law",
    "parse_dist_spec",
    "phi1_interior",
    "power_law",
    "run_mse_experiment",
    "sample_letter",
    "simulate_markov",
    "simulate_repeats",
    "state_changes",
    "transition_matrix",
    "two_point",
    "uniform",
]
