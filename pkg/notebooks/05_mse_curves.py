"""
MSE against sample size
=======================

Monte Carlo risk of the modified estimator for the power-law input with
alphabet size 1.2n, with alpha known and with alpha estimated from the
number of state changes. The full figure grids run from the command line:

    stickymass figdata fig1 --trials 16000 --out fig1.csv
"""

from stickymass import ExperimentSpec, run_mse_experiment

# a reduced grid so the script finishes quickly
spec = ExperimentSpec(
    "powerlaw:1.2n,0.1",
    alphas=(0.5, 0.75),
    ns=(100, 200, 400),
    trials=400,
    seed=0,
)
report = run_mse_experiment(spec, threads=1)

print(f"{'alpha':>5} {'n':>4} {'known':>10} {'+/-':>9} {'estimated':>10} {'exact':>10}")
for row in report.rows:
    print(
        f"{row.alpha:5.2f} {row.n:4d} {row.mse_known:10.5f} {row.se_known:9.5f}"
        f" {row.mse_estimated:10.5f} {row.exact_mse:10.5f}"
    )
