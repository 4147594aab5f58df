import pytest

from semigrass.config import config
from semigrass.errors import WindowTooSmall
from semigrass.fqlinalg import MatrixFq, coordinate_subspace, rref, span
from semigrass.grassmann import ChartIndex, finite_charts
from semigrass.semiinf import (
    ChartPoint,
    J,
    compose,
    first_chart,
    group_act,
    identity,
    parabolic_element,
    pi_n,
    random_chart_point,
    random_group_element,
    relative_dimension,
    same_subspace,
    theta,
)


@pytest.fixture
def origin(f2):
    return ChartPoint(spec=f2)


####################
### CHART POINTS ###
####################


def test_chart_point_normalizes_entries(f3):
    p = ChartPoint(spec=f3, entries=[(("e", 2), ("f", 1), 2), (("e", 1), ("f", 3), 0)])
    assert p.entries == ((("e", 2), ("f", 1), 2),)
    assert p.max_index == 2
    assert p.chart == ChartIndex()


@pytest.mark.parametrize(
    "kwargs",
    [
        {"omega": {0}},
        {"omega": {1}, "entries": [(("e", 1), ("f", 1), 1)]},
        {"entries": [(("e", 1), ("e", 2), 1)]},
        {"entries": [(("e", 1), ("f", 1), 1), (("e", 1), ("f", 1), 1)]},
        {"entries": [(("e", 1), ("f", 1), 3)]},
    ],
    ids=["zero-index", "row-outside-V", "column-outside-W", "duplicate", "not-a-field-element"],
)
def test_chart_point_validation(f3, kwargs):
    with pytest.raises(ValueError):
        ChartPoint(spec=f3, **kwargs)


def test_matrix_roundtrip(f3, rng):
    chart = ChartIndex(omega=frozenset({2}), xi=frozenset({1, 3}))
    p = random_chart_point(f3, chart, 4, rng)
    assert ChartPoint.from_matrix(p.matrix(4), chart, 4) == p


@pytest.mark.parametrize(
    "omega, xi, expected",
    [(set(), set(), 0), ({1}, set(), -1), (set(), {1}, 1), ({1, 3}, {2}, -1)],
)
def test_relative_dimension_of_chart_origins(f2, omega, xi, expected):
    assert relative_dimension(ChartPoint(spec=f2, omega=omega, xi=xi)) == expected


def test_relative_dimension_ignores_entries(f2, rng):
    for chart in finite_charts(3):
        assert relative_dimension(random_chart_point(f2, chart, 3, rng)) == 0


##################
### TRUNCATION ###
##################


def test_pi_n_examples(f2, origin):
    assert pi_n(origin, 3) == coordinate_subspace(f2, 6, range(3))
    p = ChartPoint(spec=f2, entries=[(("e", 1), ("f", 1), 1)])
    assert pi_n(p, 2) == span(f2, 4, [[1, 0, 1, 0], [0, 1, 0, 0]])
    q = ChartPoint(spec=f2, xi={1})
    assert pi_n(q, 2).dim == 3


def test_pi_n_needs_a_wide_window(f2):
    p = ChartPoint(spec=f2, entries=[(("e", 1), ("f", 3), 1)])
    with pytest.raises(WindowTooSmall):
        pi_n(p, 2)


def test_same_subspace_across_charts(f2):
    p = ChartPoint(spec=f2, entries=[(("e", 1), ("f", 1), 1)])
    other = ChartPoint(spec=f2, omega={1}, xi={1}, entries=[(("f", 1), ("e", 1), 1)])
    assert same_subspace(p, other)
    assert not same_subspace(p, ChartPoint(spec=f2))


def test_first_chart_prefers_small_charts(f2):
    W = coordinate_subspace(f2, 4, [2, 3])
    assert first_chart(coordinate_subspace(f2, 4, [0, 1]), 2) == ChartIndex()
    assert first_chart(W, 2) == ChartIndex(omega=frozenset({1, 2}), xi=frozenset({1, 2}))


####################
### GROUP ACTION ###
####################


def test_identity_action(f3, rng):
    p = random_chart_point(f3, ChartIndex(), 3, rng)
    assert group_act(p, identity(f3)) == p
    q = random_chart_point(f3, ChartIndex(omega=frozenset({1}), xi=frozenset({2})), 3, rng)
    assert same_subspace(group_act(q, identity(f3)), q)


def test_shift_adds_a_dimension(origin, f2):
    moved = group_act(origin, J(f2))
    assert relative_dimension(moved) == 1
    assert moved.chart == ChartIndex(xi=frozenset({1}))


def test_parabolic_action_translates(f3, rng):
    a = MatrixFq.from_rows(f3, [[1, 2], [0, 1]])
    b = MatrixFq(f3, rng.integers(0, 3, size=(2, 2)))
    d = MatrixFq.from_rows(f3, [[2, 0], [1, 1]])
    g = parabolic_element(a, b, d)
    T = MatrixFq(f3, rng.integers(0, 3, size=(2, 2)))
    p = ChartPoint.from_matrix(T, ChartIndex(), 2)
    moved = group_act(p, g)
    a_inv = MatrixFq.from_rows(f3, [[1, 1], [0, 1]])
    assert moved.chart == ChartIndex()
    assert moved.matrix(2) == a_inv @ b + a_inv @ T @ d


def test_dimension_is_equivariant(f2, rng):
    charts = [ChartIndex(), ChartIndex(omega=frozenset({1})), ChartIndex(xi=frozenset({2})), ChartIndex(omega=frozenset({2}), xi=frozenset({1}))]
    for trial in range(60):
        p = random_chart_point(f2, charts[trial % len(charts)], 2, rng)
        g = random_group_element(f2, int(rng.integers(0, 3)), int(rng.integers(-2, 3)), rng)
        assert relative_dimension(group_act(p, g)) == relative_dimension(p) + theta(g)


def test_action_is_a_right_action(f2, rng):
    for _ in range(20):
        p = random_chart_point(f2, ChartIndex(), 2, rng)
        g = random_group_element(f2, 2, int(rng.integers(-1, 2)), rng)
        h = random_group_element(f2, 1, int(rng.integers(-1, 2)), rng)
        assert same_subspace(group_act(group_act(p, g), h), group_act(p, compose(g, h)))


def test_debug_window_check(f2, rng):
    config.set_debug_window_check(True)
    try:
        p = random_chart_point(f2, ChartIndex(), 2, rng)
        g = random_group_element(f2, 2, -1, rng)
        assert relative_dimension(group_act(p, g)) == -1
    finally:
        config.set_debug_window_check(False)


def test_relative_dimension_on_any_covering_window(f3, rng):
    charts = [ChartIndex(), ChartIndex(omega=frozenset({1, 2})), ChartIndex(xi=frozenset({1, 3})), ChartIndex(omega=frozenset({2}), xi=frozenset({1, 2, 3}))]
    for chart in charts:
        p = random_chart_point(f3, chart, 3, rng)
        expected = len(chart.xi) - len(chart.omega)
        assert relative_dimension(p) == expected
        for n in range(max(p.max_index, 1), p.max_index + 3):
            L = pi_n(p, n)
            projected = rref(MatrixFq(f3, L.basis.entries[:, :n])).rank
            meets_w, codim = L.dim - projected, n - projected
            assert meets_w - codim == L.dim - n == expected
