import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stickymass.distributions import DiscreteDistribution, two_point, uniform
from stickymass.stats import counts, missing_mass, missing_mass_direct, phi1_interior, state_changes

A, B, C, D, E = 1, 2, 3, 4, 5

sequences = st.lists(st.integers(1, 6), min_size=1, max_size=40)


def test_counts_examples():
    occ = counts([A, A, B])
    assert occ.counts == {A: 2, B: 1}
    assert occ.phi == {1: 1, 2: 1}
    assert counts([A, B, C, D, E]).phi == {1: 5}
    const = counts([C] * 9)
    assert const.phi == {9: 1} and const.phi_l(1) == 0


@given(sequences)
def test_counts_invariants(seq):
    occ = counts(seq)
    assert sum(occ.counts.values()) == len(seq)
    assert sum(level * k for level, k in occ.phi.items()) == len(seq)
    for level, k in occ.phi.items():
        assert k == sum(1 for v in occ.counts.values() if v == level)


def test_missing_mass_examples():
    assert missing_mass([1, 1, 2], uniform(3)) == pytest.approx(1 / 3, abs=1e-15)
    assert missing_mass([3, 1, 2, 2], uniform(3)) == 0.0
    assert missing_mass([1, 1], two_point(0.1, 4)) == pytest.approx(0.4, abs=1e-15)


def test_missing_mass_rejects_foreign_letters():
    with pytest.raises(ValueError):
        missing_mass([1, 4], uniform(3))


@given(seq=sequences, w=st.lists(st.floats(0.01, 1), min_size=6, max_size=6))
def test_missing_mass_two_ways(seq, w):
    w = np.asarray(w)
    d = DiscreteDistribution(w / w.sum() if abs(w.sum()) > 0 else w)
    assert abs(missing_mass(seq, d) - missing_mass_direct(seq, d)) <= 1e-15


def test_phi1_interior_examples():
    assert phi1_interior([A, B, C, A]) == 2
    assert phi1_interior([A, B, B, C]) == 0
    assert phi1_interior([A, B, A, C, A]) == 2


def test_phi1_interior_needs_three():
    with pytest.raises(ValueError):
        phi1_interior([A, B])


@given(st.lists(st.integers(1, 6), min_size=3, max_size=40))
def test_phi1_interior_bounds(seq):
    v = phi1_interior(seq)
    assert 0 <= v <= len(seq) - 2
    assert v <= counts(seq).phi_l(1) + 2


def test_state_changes_examples():
    assert state_changes([A] * 7) == 0
    assert state_changes([A, B, A, B]) == 3
    assert state_changes([A, A, B, B]) == 1


@given(sequences)
def test_state_changes_bound(seq):
    tau = state_changes(seq)
    assert tau <= len(seq) - 1
    no_adjacent_repeat = all(x != y for x, y in zip(seq, seq[1:]))
    assert (tau == len(seq) - 1) == no_adjacent_repeat
