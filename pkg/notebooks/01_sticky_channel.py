"""
Simulating a sticky channel
===========================

Each input letter is drawn from a distribution and then repeated a
geometric number of times. Seen one output step at a time, this is a
Markov chain that keeps the previous letter with probability alpha and
otherwise draws afresh.
"""

import numpy as np

from stickymass import ChannelParams, power_law, simulate_markov, simulate_repeats, transition_matrix

rng = np.random.default_rng(0)
dist = power_law(8, 0.5)
params = ChannelParams(0.75)

# the two simulators describe the same output law
print("markov :", simulate_markov(dist, params, 30, rng).letters)
print("repeats:", simulate_repeats(dist, params, 30, rng).letters)

# runs get longer as alpha grows: 1 / (1 - alpha) repeats per input draw,
# a bit more once consecutive draws of the same letter merge
for alpha in (0.0, 0.5, 0.9):
    seq = simulate_markov(dist, ChannelParams(alpha), 20000, rng).letters
    runs = 1 + np.count_nonzero(np.diff(seq))
    print(f"alpha={alpha}: mean run length {seq.size / runs:.2f}")

# the dense kernel is alpha * I + (1 - alpha) * (rows equal to p)
P = transition_matrix(power_law(3, 1.0), ChannelParams(0.5))
print(np.round(P, 3))
print("rows sum to one:", np.allclose(P.sum(axis=1), 1.0))
