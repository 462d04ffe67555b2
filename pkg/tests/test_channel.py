import numpy as np
import pytest

from stickymass import oracle
from stickymass.channel import (
    ChannelParams,
    SampleSequence,
    simulate_markov,
    simulate_repeats,
    transition_matrix,
    transition_row,
)
from stickymass.distributions import DiscreteDistribution, power_law, uniform
from stickymass.errors import ResourceLimitError


def sequence_frequencies(sim, dist, alpha, n, runs, rng):
    """Empirical law of length-n sequences, indexed lexicographically."""
    K = dist.K
    weights = K ** np.arange(n - 1, -1, -1)
    block = np.stack([sim(dist, ChannelParams(alpha), n, rng).letters for _ in range(runs)])
    return np.bincount((block - 1) @ weights, minlength=K**n) / runs


class TestParams:
    def test_range(self):
        ChannelParams(0.0)
        with pytest.raises(ValueError):
            ChannelParams(1.0)
        with pytest.raises(ValueError):
            ChannelParams(-0.1)

    def test_sequence_type(self):
        s = SampleSequence(np.array([1, 2, 2]))
        assert s.n == 3 and list(s) == [1, 2, 2]
        with pytest.raises(ValueError):
            SampleSequence(np.array([], dtype=int))


class TestSimulators:
    @pytest.mark.parametrize("sim", [simulate_markov, simulate_repeats])
    def test_point_mass_is_constant(self, sim, rng):
        d = DiscreteDistribution(np.array([1.0]))
        assert set(sim(d, ChannelParams(0.7), 50, rng)) == {1}

    @pytest.mark.parametrize("sim", [simulate_markov, simulate_repeats])
    def test_exact_length_and_alphabet(self, sim, rng):
        d = power_law(30, 0.5)
        for n in (1, 2, 17, 500):
            s = sim(d, ChannelParams(0.9), n, rng)
            assert s.n == n
            assert s.letters.min() >= 1 and s.letters.max() <= 30

    def test_alpha_zero_is_iid(self, rng):
        d = uniform(3)
        x = np.concatenate([simulate_markov(d, ChannelParams(0.0), 200, rng).letters for _ in range(200)])
        # i.i.d. uniform: repeats between neighbours happen 1/3 of the time
        assert abs(np.mean(x[1:] == x[:-1]) - 1 / 3) < 0.01
        assert abs(np.mean(x == 1) - 1 / 3) < 0.01

    def test_repeats_alpha_zero_is_first_draws(self):
        d = power_law(10, 1.0)
        s = simulate_repeats(d, ChannelParams(0.0), 40, np.random.default_rng(3))
        rng = np.random.default_rng(3)
        assert np.array_equal(s.letters, d.sample(40, rng))

    def test_repeat_probability_two_letters(self, rng):
        d = uniform(2)
        hits = 0
        runs = 100_000
        for _ in range(runs):
            s = simulate_markov(d, ChannelParams(0.5), 2, rng).letters
            hits += s[0] == s[1]
        assert abs(hits / runs - 0.75) < 0.01

    def test_mean_run_length(self, rng):
        d = power_law(5000, 0.1)
        alpha = 0.8
        s = simulate_markov(d, ChannelParams(alpha), 200_000, rng).letters
        changes = np.count_nonzero(s[1:] != s[:-1])
        mean_run = s.size / (changes + 1)
        # a new draw can repeat the old letter, so runs are slightly longer
        expected = 1 / ((1 - alpha) * (1 - np.sum(d.probs**2)))
        assert abs(mean_run - expected) / expected < 0.02

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_both_simulators_match_exact_law(self, n):
        d = DiscreteDistribution(np.array([0.3, 0.7]))
        alpha = 0.6
        runs = 1_000_000 if n == 3 else 200_000
        exact = oracle.enumerate_law(d, alpha, n).probs
        se = np.sqrt(exact * (1 - exact) / runs)
        for sim, seed in ((simulate_markov, 1), (simulate_repeats, 2)):
            freq = sequence_frequencies(sim, d, alpha, n, runs, np.random.default_rng(seed))
            assert np.all(np.abs(freq - exact) <= 3 * se + 1e-12), (sim.__name__, freq, exact)
        # direct comparison for the K=2, n=3 joint law
        if n == 3:
            fm = sequence_frequencies(simulate_markov, d, alpha, n, runs, np.random.default_rng(7))
            fr = sequence_frequencies(simulate_repeats, d, alpha, n, runs, np.random.default_rng(8))
            assert np.max(np.abs(fm - fr)) < 0.01


class TestTransitionMatrix:
    def test_alpha_zero_rows_equal_dist(self):
        d = power_law(6, 0.5)
        P = transition_matrix(d, ChannelParams(0.0))
        assert np.allclose(P, np.tile(d.probs, (6, 1)), atol=0)

    def test_two_letter_example(self):
        P = transition_matrix(uniform(2), ChannelParams(0.5))
        np.testing.assert_allclose(P, [[0.75, 0.25], [0.25, 0.75]], atol=1e-15)

    def test_stochastic_and_stationary(self, rng):
        for _ in range(30):
            K = int(rng.integers(1, 40))
            d = DiscreteDistribution(rng.dirichlet(np.ones(K)))
            alpha = float(rng.uniform(0, 0.99))
            P = transition_matrix(d, ChannelParams(alpha))
            assert np.all(P >= 0)
            assert np.max(np.abs(P.sum(axis=1) - 1)) <= 1e-12
            assert np.max(np.abs(d.probs @ P - d.probs)) <= 1e-12

    def test_large_alphabet_uses_rows(self):
        d = uniform(5000)
        with pytest.raises(ResourceLimitError):
            transition_matrix(d, ChannelParams(0.5))
        row = transition_row(d, ChannelParams(0.5), 7)
        assert row[6] == pytest.approx(0.5 + 0.5 / 5000)
        assert row.sum() == pytest.approx(1.0)
