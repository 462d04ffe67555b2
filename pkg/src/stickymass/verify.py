"""Closed form vs exhaustive enumeration, over a grid of small cases."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from stickymass import analytics as an
from stickymass import oracle
from stickymass.channel import ChannelParams, transition_matrix
from stickymass.distributions import DiscreteDistribution, two_point

GRIDS: Dict[str, dict] = {
    "small": dict(Ks=(2, 3), ns=(5, 6), alphas=(0.0, 0.5), dists_per_cell=2),
    "full": dict(Ks=(2, 3, 4), ns=(5, 6, 7), alphas=(0.0, 0.3, 0.7), dists_per_cell=5),
}
TOL = 1e-10


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    max_err: float = 0.0
    tol: float = TOL

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.max_err <= self.tol

    def add(self, err: float):
        self.cases += 1
        if not err <= self.max_err:  # also records nan
            self.max_err = err if not math.isnan(err) else math.inf


def random_distributions(K: int, count: int, rng: np.random.Generator) -> List[DiscreteDistribution]:
    out = []
    for _ in range(count):
        w = rng.dirichlet(np.ones(K))
        out.append(DiscreteDistribution(w / math.fsum(w)))
    return out


def indicator_arrays(law: oracle.SequenceLaw):
    """Per-letter ``(absent, interior singleton off the ends)`` indicator columns."""
    S = law.sequences
    absent = {x: oracle.occurrences(S, x) == 0 for x in range(1, law.K + 1)}
    single = {
        x: (oracle.occurrences(S, x, interior=True) == 1) & oracle.off_ends(S, x) for x in range(1, law.K + 1)
    }
    return absent, single


def check_cell(dist: DiscreteDistribution, alpha: float, n: int, results: Dict[str, CheckResult]):
    law = oracle.enumerate_law(dist, alpha, n)
    P = law.probs
    absent, single = indicator_arrays(law)
    p = dist.probs
    c1 = (1 - alpha) ** 2 * (n - 2)

    def ep(mask):
        return math.fsum(P[mask])

    for x in range(1, dist.K + 1):
        px = p[x - 1]
        results["q_x0"].add(abs(an.q_x0(px, alpha, n) - ep(absent[x])))
        results["q_x1"].add(abs(an.q_x1(px, alpha, n) - ep(single[x])))
    for x, y in itertools.permutations(range(1, dist.K + 1), 2):
        px, py = p[x - 1], p[y - 1]
        results["q_xy00"].add(abs(an.q_xy00(px, py, alpha, n) - ep(absent[x] & absent[y])))
        results["q_xy10"].add(abs(an.q_xy10(px, py, alpha, n) - ep(single[x] & absent[y])))
        results["q_xy01"].add(abs(an.q_xy01(px, py, alpha, n) - ep(absent[x] & single[y])))
        results["q_xy11"].add(abs(an.q_xy11(px, py, alpha, n) - ep(single[x] & single[y])))
        cross = (px * absent[x] - single[x] / c1) * (py * absent[y] - single[y] / c1)
        results["t_xy"].add(abs(an.t_xy(px, py, alpha, n) - math.fsum(P * cross)))

    est = oracle.modified_gt_array(law, alpha)
    results["exact_mse"].add(abs(an.exact_mse(dist, alpha, n) - oracle.brute_mse(law, dist, est)))
    results["exact_bias"].add(abs(an.exact_bias(dist, alpha, n) - oracle.brute_bias(law, dist, est)))


def check_markov_kl(rng, results, Ks=(2, 3), ns=(2, 3, 4, 5), pairs=3):
    res = results["markov_kl"]
    for K, n in itertools.product(Ks, ns):
        for _ in range(pairs):
            d1, d2 = random_distributions(K, 2, rng)
            a1, a2 = rng.uniform(0, 0.9, size=2)
            P1 = transition_matrix(d1, ChannelParams(a1))
            P2 = transition_matrix(d2, ChannelParams(a2))
            law1 = oracle.law_from_chain(d1.probs, P1, n)
            law2 = oracle.law_from_chain(d2.probs, P2, n)
            res.add(abs(an.markov_kl(P1, d1.probs, P2, d2.probs, n) - oracle.brute_kl(law1, law2)))


def check_two_point_kl(results, gammas=(0.05, 0.1, 0.3), Ls=(1, 2, 4, 7), alphas=(0.0, 0.3, 0.7)):
    res = results["two_point_kl_terms"]
    res.tol = 1e-12
    for g, L, a in itertools.product(gammas, Ls, alphas):
        d1, d2 = two_point(0.0, L), two_point(g, L)
        P1 = transition_matrix(d1, ChannelParams(a))
        P2 = transition_matrix(d2, ChannelParams(a))
        terms = an.two_point_kl_terms(g, L, a)
        res.add(abs(terms.stationary_kl - an.kl_divergence(d1.probs, d2.probs)))
        res.add(abs(terms.row1_kl - an.kl_divergence(P1[0], P2[0])))
        for x in range(1, L + 1):
            res.add(abs(terms.row_other_kl - an.kl_divergence(P1[x], P2[x])))


def check_epsilons(results, betas=(0.0, 0.1, 0.3), Ls=(2, 3), alphas=(0.0, 0.5), ns=(2, 4, 5)):
    res = results["epsilon_probs"]
    for b, L, a, n in itertools.product(betas, Ls, alphas, ns):
        e1, e2 = an.epsilon_probs(b, a, n)
        for eps, gamma in ((e1, 0.0), (e2, b)):
            law = oracle.enumerate_law(two_point(gamma, L), a, n)
            res.add(abs(eps - oracle.event_prob(law, lambda S: oracle.occurrences(S, 1) == 0, vectorized=True)))


CHECK_NAMES = (
    "q_x0",
    "q_x1",
    "q_xy00",
    "q_xy10",
    "q_xy01",
    "q_xy11",
    "t_xy",
    "exact_mse",
    "exact_bias",
    "markov_kl",
    "two_point_kl_terms",
    "epsilon_probs",
)


def run_verification(grid: str = "small", seed: int = 0) -> List[CheckResult]:
    if grid not in GRIDS:
        raise ValueError(f"unknown grid {grid!r}; choose from {sorted(GRIDS)}")
    cfg = GRIDS[grid]
    rng = np.random.default_rng(seed)
    results = {name: CheckResult(name) for name in CHECK_NAMES}
    for K, n, a in itertools.product(cfg["Ks"], cfg["ns"], cfg["alphas"]):
        for dist in random_distributions(K, cfg["dists_per_cell"], rng):
            check_cell(dist, a, n, results)
    check_markov_kl(rng, results)
    check_two_point_kl(results)
    check_epsilons(results)
    return [results[name] for name in CHECK_NAMES]


def format_table(results: List[CheckResult]) -> str:
    lines = [f"{'check':<20} {'cases':>6} {'max_err':>12} {'tol':>8}  status"]
    for r in results:
        lines.append(f"{r.name:<20} {r.cases:>6} {r.max_err:>12.3e} {r.tol:>8.0e}  {'PASS' if r.passed else 'FAIL'}")
    return "\n".join(lines)
