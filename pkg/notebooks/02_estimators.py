"""
Good-Turing under repetition
============================

Plain Good-Turing counts singletons. On a sticky channel most letters
appear in runs, so singletons are rare and the estimate collapses toward
zero. The modified estimator counts interior singletons and rescales by
the chance that a single input draw survives as a run of length one.
"""

import numpy as np

from stickymass import (
    ChannelParams,
    estimate_alpha,
    good_turing,
    missing_mass,
    modified_good_turing,
    modified_good_turing_auto,
    power_law,
    simulate_markov,
)

rng = np.random.default_rng(1)
n = 1000
dist = power_law(1200, 0.1)

print(f"{'alpha':>6} {'truth':>8} {'GT':>8} {'mod GT':>8} {'mod GT (est)':>13} {'alpha_hat':>9}")
for alpha in (0.0, 0.5, 0.75, 0.9):
    seq = simulate_markov(dist, ChannelParams(alpha), n, rng)
    truth = missing_mass(seq, dist)
    gt = good_turing(seq).estimate
    mod = modified_good_turing(seq, alpha).estimate
    auto = modified_good_turing_auto(seq)
    print(f"{alpha:6.2f} {truth:8.4f} {gt:8.4f} {mod:8.4f} {auto.estimate:13.4f} {estimate_alpha(seq):9.4f}")

# the estimate is a ratio, not a probability, and is left unclipped;
# clipped() gives the [0, 1] version
short = modified_good_turing([1, 2, 3, 1], 0.5)
print("raw", short.estimate, "clipped", short.clipped())
