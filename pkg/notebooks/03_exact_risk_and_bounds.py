"""
Exact risk and the minimax bounds
=================================

The mean squared error of the modified estimator has a closed form as a
double sum over letter pairs. Letters sharing a mass are grouped, so cost
grows with the number of distinct masses rather than the alphabet size.
"""

import math

from stickymass import analytics as an
from stickymass import oracle, power_law, two_point, uniform

# the closed form agrees with brute-force enumeration on a small case
dist, alpha, n = uniform(3), 0.3, 6
law = oracle.enumerate_law(dist, alpha, n)
brute = oracle.brute_mse(law, dist, oracle.modified_gt_array(law, alpha))
print(f"closed form {an.exact_mse(dist, alpha, n):.15f}")
print(f"enumeration {brute:.15f}")

# bracket the risk of a few inputs between the lower bound and the
# leading upper expression
print(f"\n{'alpha':>5} {'n':>5} {'lower':>10} {'powerlaw':>10} {'uniform':>10} {'two-point':>10} {'upper':>10}")
for alpha in (0.25, 0.5, 0.75):
    for n in (100, 1000):
        K = math.ceil(1.2 * n)
        beta = an.optimal_beta(n, alpha)
        row = [
            an.lower_bound(n, alpha),
            an.exact_mse(power_law(K, 0.1), alpha, n),
            an.exact_mse(uniform(K), alpha, n),
            an.exact_mse(two_point(beta, 10**6), alpha, n),
            an.upper_bound_leading(n, alpha),
        ]
        print(f"{alpha:5.2f} {n:5d} " + " ".join(f"{v:10.3e}" for v in row))

# risk times (n - 2)(1 - alpha) settles to a constant: the 1/(n(1-alpha)) rate
for n in (100, 400, 1600):
    mse = an.exact_mse(power_law(math.ceil(1.2 * n), 0.1), 0.5, n)
    print(f"n={n}: mse * (n-2)(1-alpha) = {mse * (n - 2) * 0.5:.3f}")
