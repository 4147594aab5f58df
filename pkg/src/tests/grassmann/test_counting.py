from fractions import Fraction

import pytest

from semigrass.errors import ParameterOutOfRange
from semigrass.grassmann import (
    gl_count,
    grassmannian_count,
    grassmannian_measure,
    mu_n,
    orbit_count,
    orbit_measure,
)


@pytest.mark.parametrize("m, q, expected", [(0, 2, 1), (1, 2, 1), (2, 2, 6), (2, 3, 48), (3, 2, 168)])
def test_gl_count(m, q, expected):
    assert gl_count(m, q) == expected


@pytest.mark.parametrize(
    "m, k, q, expected",
    [(2, 1, 2, 3), (4, 2, 2, 35), (6, 3, 2, 1395), (4, 2, 3, 130), (5, 0, 7, 1), (5, 5, 7, 1)],
)
def test_grassmannian_count(m, k, q, expected):
    assert grassmannian_count(m, k, q) == expected


def test_grassmannian_count_is_symmetric():
    for m in range(7):
        for k in range(m + 1):
            assert grassmannian_count(m, k, 3) == grassmannian_count(m, m - k, 3)


@pytest.mark.parametrize(
    "n, q, expected",
    [(1, 2, [2, 1]), (2, 2, [16, 18, 1]), (0, 2, [1])],
)
def test_orbit_counts(n, q, expected):
    assert [orbit_count(n, k, q) for k in range(n + 1)] == expected


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_orbits_partition_the_grassmannian(n, q):
    assert sum(orbit_count(n, k, q) for k in range(n + 1)) == grassmannian_count(2 * n, n, q)


def test_chart_has_unit_mass():
    # the standard chart holds the q^{n^2} graphs, all in O_0
    assert mu_n(2**4, 2, 2).value == 1
    assert orbit_measure(2, 0, 2).value == 1


def test_measure_examples():
    assert grassmannian_measure(2, 2).value == Fraction(35, 16)
    assert mu_n(0, 3, 2).value == 0
    assert float(grassmannian_measure(1, 2)) == 1.5


def test_bad_parameters():
    with pytest.raises(ParameterOutOfRange):
        grassmannian_count(2, 3, 2)
    with pytest.raises(ParameterOutOfRange):
        orbit_count(2, 3, 2)
    with pytest.raises(ParameterOutOfRange):
        gl_count(-1, 2)
