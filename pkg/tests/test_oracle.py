import math

import numpy as np
import pytest

from stickymass import analytics as an
from stickymass import oracle
from stickymass.channel import ChannelParams, transition_matrix
from stickymass.distributions import explicit, two_point, uniform
from stickymass.errors import ResourceLimitError
from stickymass.estimators import modified_good_turing
from stickymass.stats import missing_mass


def test_law_sums_to_one_and_is_ordered():
    law = oracle.enumerate_law(explicit([0.2, 0.3, 0.5]), 0.4, 4)
    assert law.size == 81
    assert law.total() == pytest.approx(1.0, abs=1e-14)
    assert law.sequences[0].tolist() == [1, 1, 1, 1]
    assert law.sequences[-1].tolist() == [3, 3, 3, 3]


def test_two_letter_law_entries():
    law = oracle.enumerate_law(uniform(2), 0.5, 2)
    e = law.entries
    assert e[(1, 1)] == pytest.approx(0.375)
    assert e[(1, 2)] == pytest.approx(0.125)
    assert e[(2, 1)] == pytest.approx(0.125)
    assert e[(2, 2)] == pytest.approx(0.375)


def test_alpha_zero_is_product_law():
    d = explicit([0.1, 0.6, 0.3])
    law = oracle.enumerate_law(d, 0.0, 3)
    for seq, prob in zip(law.sequences, law.probs):
        assert prob == pytest.approx(np.prod(d.probs[seq - 1]), rel=1e-14)


def test_budget():
    with pytest.raises(ResourceLimitError, match="4\\^20"):
        oracle.enumerate_law(uniform(4), 0.5, 20)


def test_event_prob():
    law = oracle.enumerate_law(uniform(2), 0.5, 2)
    assert oracle.event_prob(law, lambda s: s[0] == s[1]) == pytest.approx(0.75)
    assert oracle.event_prob(law, lambda S: S[:, 0] == 1, vectorized=True) == pytest.approx(0.5)
    # letter 1 unseen for n = 3: (1/2)(3/4)^2
    law3 = oracle.enumerate_law(uniform(2), 0.5, 3)
    assert oracle.event_prob(law3, lambda s: 1 not in s) == pytest.approx(an.q_x0(0.5, 0.5, 3))


def test_arrays_match_row_by_row():
    d = explicit([0.25, 0.25, 0.5])
    law = oracle.enumerate_law(d, 0.3, 5)
    mm = oracle.missing_mass_array(law, d)
    est = oracle.modified_gt_array(law, 0.3)
    for i in (0, 17, 101, 242):
        seq = law.sequences[i]
        assert mm[i] == pytest.approx(missing_mass(seq, d), abs=1e-15)
        assert est[i] == pytest.approx(modified_good_turing(seq, 0.3).estimate, rel=1e-14)


def test_callable_and_array_estimators_agree():
    d = uniform(3)
    law = oracle.enumerate_law(d, 0.2, 5)
    by_call = oracle.brute_mse(law, d, lambda s: modified_good_turing(s, 0.2).estimate)
    by_array = oracle.brute_mse(law, d, oracle.modified_gt_array(law, 0.2))
    assert by_call == pytest.approx(by_array, abs=1e-15)


def test_brute_mse_frozen():
    d = uniform(2)
    law = oracle.enumerate_law(d, 0.5, 5)
    assert oracle.brute_mse(law, d, oracle.modified_gt_array(law, 0.5)) == pytest.approx(0.2666015625, abs=1e-14)
    law0 = oracle.enumerate_law(d, 0.0, 5)
    assert oracle.brute_bias(law0, d, oracle.modified_gt_array(law0, 0.0)) == pytest.approx(0.03125, abs=1e-14)


def test_tv_and_kl():
    a = oracle.enumerate_law(two_point(0.0, 2), 0.5, 4)
    b = oracle.enumerate_law(two_point(0.1, 2), 0.5, 4)
    assert oracle.brute_tv(a, a) == 0.0
    assert oracle.brute_tv(a, b) == pytest.approx(0.12203125, abs=1e-12)
    kl = oracle.brute_kl(a, b)
    assert oracle.brute_tv(a, b) <= math.sqrt(kl / 2)
    assert kl == pytest.approx(an.two_point_chain_kl(0.1, 2, 0.5, 4), abs=1e-12)


def test_kl_support_and_shape():
    a = oracle.law_from_chain([1.0, 0.0], np.eye(2), 2)
    b = oracle.law_from_chain([0.0, 1.0], np.eye(2), 2)
    assert oracle.brute_kl(a, b) == math.inf
    with pytest.raises(ValueError):
        oracle.brute_tv(a, oracle.enumerate_law(uniform(2), 0.5, 3))


def test_markov_kl_matches_enumeration():
    d1, d2 = explicit([0.5, 0.5]), explicit([0.6, 0.4])
    P1 = transition_matrix(d1, ChannelParams(0.3))
    P2 = transition_matrix(d2, ChannelParams(0.3))
    a = oracle.law_from_chain(d1.probs, P1, 3)
    b = oracle.law_from_chain(d2.probs, P2, 3)
    assert oracle.brute_kl(a, b) == pytest.approx(0.042281211990936464, abs=1e-14)
