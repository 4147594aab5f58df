import numpy as np
import pytest

from semigrass.errors import Singular
from semigrass.fqlinalg import MatrixFq, coordinate_subspace, inverse, is_invertible
from semigrass.grassmann import (
    ChartIndex,
    GrassmannianSpec,
    chart_membership,
    chart_transition,
    enumerate_subspaces,
    find_chart,
    finite_charts,
    graph_subspace,
    moebius_action,
    moebius_census,
    split_blocks,
)
from semigrass.grassmann.charts import all_matrices

STANDARD = ChartIndex()


def _block(a, b, c, d):
    return np.block([[a, b], [c, d]])


def test_chart_index_labels():
    chart = ChartIndex(omega=frozenset({2}), xi=frozenset({1}))
    assert chart.v_labels(3) == [("e", 1), ("e", 3), ("f", 1)]
    assert chart.w_labels(3) == [("e", 2), ("f", 2), ("f", 3)]
    assert chart.max_index == 2
    assert chart.relative_dimension == 0
    assert repr(chart) == "M[[2], [1]]"
    with pytest.raises(ValueError):
        ChartIndex(omega=frozenset({0}))


def test_finite_charts_order():
    charts = finite_charts(2)
    assert len(charts) == 1 + 4 + 1
    assert charts[0] == STANDARD
    assert [c.sort_key for c in charts] == sorted(c.sort_key for c in charts)


def test_membership_examples(f2):
    n = 2
    V = coordinate_subspace(f2, 2 * n, range(n))
    W = coordinate_subspace(f2, 2 * n, range(n, 2 * n))
    full = ChartIndex(omega=frozenset({1, 2}), xi=frozenset({1, 2}))
    assert chart_membership(V, STANDARD, n) == MatrixFq.zeros(f2, 2, 2)
    assert chart_membership(W, STANDARD, n) is None
    assert chart_membership(W, full, n) == MatrixFq.zeros(f2, 2, 2)


def test_graph_roundtrip(f3, rng):
    n = 2
    for chart in finite_charts(n):
        T = MatrixFq(f3, rng.integers(0, 3, size=(n, n)))
        L = graph_subspace(T, chart, n)
        assert L.dim == n
        assert chart_membership(L, chart, n) == T


def test_graph_shape_is_checked(f2):
    with pytest.raises(ValueError):
        graph_subspace(MatrixFq.zeros(f2, 1, 2), STANDARD, 2)


def test_chart_transition_is_invertible(f2):
    n = 2
    source = STANDARD
    target = ChartIndex(omega=frozenset({1}), xi=frozenset({1}))
    moved = 0
    for T in all_matrices(f2, n, n):
        S = chart_transition(T, source, target, n)
        if S is None:
            continue
        moved += 1
        assert chart_transition(S, target, source, n) == T
    assert 0 < moved < 16


def test_every_point_has_a_chart(f2):
    for L in enumerate_subspaces(GrassmannianSpec(spec=f2, m=4, k=2)):
        found = find_chart(L, 2)
        assert found is not None, f"{L!r} lies in no chart"
        chart, T = found
        assert graph_subspace(T, chart, 2) == L


####################
### MOEBIUS MAPS ###
####################


def test_moebius_identity(f3, rng):
    g = MatrixFq.identity(f3, 4)
    T = MatrixFq(f3, rng.integers(0, 3, size=(2, 2)))
    assert moebius_action(T, g) == T


def test_moebius_translation(f3, rng):
    eye, zero = np.eye(2, dtype=np.int64), np.zeros((2, 2), dtype=np.int64)
    B = rng.integers(0, 3, size=(2, 2))
    g = MatrixFq(f3, _block(eye, B, zero, eye))
    T = MatrixFq(f3, rng.integers(0, 3, size=(2, 2)))
    assert moebius_action(T, g) == T + MatrixFq(f3, B)


def test_moebius_origin(f2):
    g = MatrixFq.from_rows(f2, [[1, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1], [1, 0, 0, 1]])
    assert is_invertible(g)
    a, b, _, _ = split_blocks(g)
    assert moebius_action(MatrixFq.zeros(f2, 2, 2), g) == inverse(a) @ b


def test_moebius_outside_domain(f2):
    eye, zero = np.eye(1, dtype=np.int64), np.zeros((1, 1), dtype=np.int64)
    swap = MatrixFq(f2, _block(zero, eye, eye, zero))
    with pytest.raises(Singular):
        moebius_action(MatrixFq.zeros(f2, 1, 1), swap)


def test_moebius_census(f2, rng):
    assert moebius_census(MatrixFq.identity(f2, 4)) == (16, 16, True)
    for _ in range(20):
        g = MatrixFq(f2, rng.integers(0, 2, size=(4, 4)))
        if not is_invertible(g):
            continue
        census = moebius_census(g)
        assert census.injective
        assert census.domain == census.image
