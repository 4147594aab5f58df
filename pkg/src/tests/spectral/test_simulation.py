from fractions import Fraction

import numpy as np
import pytest

from semigrass.errors import ParameterOutOfRange
from semigrass.qspecial import orbit_weight
from semigrass.spectral import (
    markov_walk,
    mc_orbit_distribution,
    stationary_distribution,
    up_rate,
    walk_summary,
)
from semigrass.utils import make_rng


def test_walk_is_reproducible():
    first = markov_walk(2, 0, 1000, make_rng(7))
    again = markov_walk(2, 0, 1000, make_rng(7))
    assert np.array_equal(first, again)
    assert len(first) == 1001
    assert first[0] == 0
    assert np.all(np.abs(np.diff(first)) <= 1)
    assert first.min() >= 0


def test_stationary_distribution():
    law = stationary_distribution(2, 10)
    assert sum(law) == 1
    assert law[1] / law[0] == orbit_weight(1, 2)
    assert law[2] / law[1] == Fraction(4, 9) / 2


def test_walk_frequencies_match_weights():
    summary = walk_summary(2, 0, 1_000_000, make_rng(7), kmax=3)
    assert [b.k for b in summary.bins] == [0, 1, 2, 3]
    assert summary.bins[0].frequency == pytest.approx(0.2888, abs=0.01)
    assert summary.max_deviation(3) < 0.01


def test_up_rate_from_zero():
    trajectory = markov_walk(3, 0, 200_000, make_rng(11))
    assert up_rate(trajectory, 0) == pytest.approx(1 / 3, abs=0.01)
    assert np.isnan(up_rate(np.array([0, 0]), 5))


def test_mc_orbit_distribution_small():
    dist = mc_orbit_distribution(1, 2, 30_000, make_rng(3))
    assert [b.exact for b in dist.bins] == [Fraction(2, 3), Fraction(1, 3)]
    assert sum(b.count for b in dist.bins) == 30_000
    assert dist.within(3.0)


def test_mc_orbit_distribution_reproducible():
    first = mc_orbit_distribution(6, 2, 100_000, make_rng(42))
    again = mc_orbit_distribution(6, 2, 100_000, make_rng(42))
    assert [b.count for b in first.bins] == [b.count for b in again.bins]
    assert first.within(3.0)


def test_batched_and_single_samplers_agree_in_law():
    single = mc_orbit_distribution(2, 3, 5_000, make_rng(5), batch_size=1)
    assert single.within(4.0)
    assert sum(b.count for b in single.bins) == 5_000


def test_mc_rejects_bad_sizes():
    with pytest.raises(ParameterOutOfRange):
        mc_orbit_distribution(0, 2, 10, make_rng(0))
    with pytest.raises(ParameterOutOfRange):
        mc_orbit_distribution(2, 2, 0, make_rng(0))
