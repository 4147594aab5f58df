import pytest

from semigrass.config import config
from semigrass.errors import AmbientMismatch, TooLarge
from semigrass.fqlinalg import contains, coordinate_subspace, full_space, span, zero_subspace
from semigrass.gf import field_of_order
from semigrass.grassmann import (
    GrassmannianSpec,
    enumerate_subspaces,
    grassmannian_count,
    hyperplanes,
    orbit_count,
    orbit_index,
    orbit_tally,
    overspaces,
)
from semigrass.grassmann.enumeration import projective_points


def test_lines_of_the_plane(f2):
    lines = list(enumerate_subspaces(GrassmannianSpec(spec=f2, m=2, k=1)))
    assert set(lines) == {span(f2, 2, [[1, 0]]), span(f2, 2, [[0, 1]]), span(f2, 2, [[1, 1]])}


@pytest.mark.parametrize("q, m, k", [(2, 4, 2), (3, 4, 2), (4, 3, 1), (2, 5, 3)])
def test_enumeration_is_complete_and_distinct(q, m, k):
    found = list(enumerate_subspaces(GrassmannianSpec(spec=field_of_order(q), m=m, k=k)))
    assert len(found) == grassmannian_count(m, k, q)
    assert len(set(found)) == len(found)
    assert all(L.dim == k for L in found)


def test_zero_dimensional_grassmannian(f3):
    assert list(enumerate_subspaces(GrassmannianSpec(spec=f3, m=4, k=0))) == [zero_subspace(f3, 4)]


def test_enumeration_cap(f2):
    previous = config.get_enumeration_cap()
    config.set_enumeration_cap(10)
    try:
        with pytest.raises(TooLarge):
            next(enumerate_subspaces(GrassmannianSpec(spec=f2, m=4, k=2)))
    finally:
        config.set_enumeration_cap(previous)


def test_grassmannian_spec_validation(f2):
    with pytest.raises(ValueError):
        GrassmannianSpec(spec=f2, m=2, k=3)


def test_orbit_index_examples(f2):
    n = 3
    V = coordinate_subspace(f2, 2 * n, range(n))
    W = coordinate_subspace(f2, 2 * n, range(n, 2 * n))
    graph = span(f2, 2 * n, [[1, 0, 0, 1, 1, 0], [0, 1, 0, 0, 1, 1], [0, 0, 1, 1, 0, 1]])
    assert orbit_index(V, n) == 0
    assert orbit_index(W, n) == n
    assert orbit_index(graph, n) == 0
    with pytest.raises(AmbientMismatch):
        orbit_index(V, 2)


@pytest.mark.parametrize("q, n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_orbit_tally_matches_formula(q, n):
    assert orbit_tally(field_of_order(q), n) == {k: orbit_count(n, k, q) for k in range(n + 1)}


def test_projective_points_count():
    assert len(list(projective_points(3, 3))) == 13
    assert all(p[p.nonzero()[0][0]] == 1 for p in projective_points(3, 3))


def test_hyperplanes_and_overspaces(f2):
    line = span(f2, 2, [[1, 1]])
    assert list(hyperplanes(line)) == [zero_subspace(f2, 2)]
    assert len(set(hyperplanes(full_space(f2, 2)))) == 3
    assert len(set(overspaces(zero_subspace(f2, 2), 2))) == 3
    for M in overspaces(line, 2):
        assert M == full_space(f2, 2)


def test_overspaces_contain_their_base(f3):
    K = span(f3, 4, [[1, 2, 0, 1]])
    found = set(overspaces(K, 4))
    assert len(found) == (3**3 - 1) // 2
    assert all(M.dim == 2 and contains(M, K.basis.tolist()[0]) for M in found)

