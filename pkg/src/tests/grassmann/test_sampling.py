from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from semigrass.errors import PatternOutOfRange
from semigrass.fqlinalg import full_space, is_subspace_of, span, zero_subspace
from semigrass.grassmann import (
    GrassmannianSpec,
    flag_law,
    forget_flag,
    sample_flag,
    sample_uniform_subspace,
)
from semigrass.grassmann.sampling import sample_hyperplane, sample_overspace


def test_uniform_lines(f2, rng):
    samples = 30_000
    gspec = GrassmannianSpec(spec=f2, m=2, k=1)
    tally = Counter(sample_uniform_subspace(gspec, rng) for _ in range(samples))
    assert len(tally) == 3
    sigma = np.sqrt(samples * (1 / 3) * (2 / 3))
    for line, count in tally.items():
        assert abs(count - samples / 3) < 3 * sigma, f"{line!r} drawn {count} times"


def test_degenerate_dimensions(f3, rng):
    assert sample_uniform_subspace(GrassmannianSpec(spec=f3, m=3, k=0), rng) == zero_subspace(f3, 3)
    assert sample_uniform_subspace(GrassmannianSpec(spec=f3, m=3, k=3), rng) == full_space(f3, 3)


def test_hyperplane_and_overspace_draws(f3, rng):
    L = span(f3, 4, [[1, 0, 2, 0], [0, 1, 1, 1]])
    K = sample_hyperplane(L, rng)
    M = sample_overspace(L, rng)
    assert K.dim == 1 and is_subspace_of(K, L)
    assert M.dim == 3 and is_subspace_of(L, M)


def test_sample_flag_shapes(f2, rng):
    start = zero_subspace(f2, 2)
    assert sample_flag(start, [], rng) == [start]
    flag = sample_flag(start, [1], rng)
    assert flag[1].dim == 1

    L = span(f2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    _, K, M = sample_flag(L, [-1, 1], rng)
    assert is_subspace_of(K, L) and is_subspace_of(K, M)
    assert M.dim == 2


def test_pattern_out_of_range(f2, rng):
    with pytest.raises(PatternOutOfRange):
        sample_flag(zero_subspace(f2, 2), [-1], rng)
    with pytest.raises(PatternOutOfRange):
        sample_flag(zero_subspace(f2, 2), [2], rng)
    with pytest.raises(PatternOutOfRange):
        flag_law(f2, 2, 2, [1])


def test_one_step_overspace_law(f2):
    law = flag_law(f2, 2, 0, [1])
    assert len(law) == 3
    assert set(law.values()) == {Fraction(1, 3)}


def test_flag_law_forgets_to_one_step_laws(f2):
    two_step = flag_law(f2, 4, 2, [-1, 1])
    assert sum(two_step.values()) == 1
    assert forget_flag(two_step, [0, 1]) == flag_law(f2, 4, 2, [-1])
    assert forget_flag(two_step, [1, 2]) == flag_law(f2, 4, 1, [1])


def test_start_end_law_is_symmetric(f2):
    ends = forget_flag(flag_law(f2, 4, 2, [-1, 1]), [0, 2])
    for (start, end), mass in ends.items():
        assert ends[(end, start)] == mass


def test_flag_sampler_matches_law(f2, rng):
    law = forget_flag(flag_law(f2, 2, 1, [-1, 1]), [2])
    start = span(f2, 2, [[1, 1]])
    draws = 6000
    tally = Counter(sample_flag(start, [-1, 1], rng)[2] for _ in range(draws))
    # from a line the chain lands uniformly on one of the 3 lines
    for (line,), mass in law.items():
        assert abs(tally[line] / draws - float(mass)) < 0.03
