from itertools import combinations, product
from typing import Iterator, List, NamedTuple, Optional, Set, Tuple

import numpy as np

from semigrass.errors import AmbientMismatch, Singular
from semigrass.fqlinalg import MatrixFq, Subspace, inverse, rank, row_space
from semigrass.grassmann.schemas import ChartIndex, label_coordinate


def _check_chart_fits(c: ChartIndex, n: int) -> None:
    if c.max_index > n:
        raise ValueError(f"Chart {c!r} does not fit in the window of size {n}")


def chart_coordinates(c: ChartIndex, n: int) -> Tuple[List[int], List[int]]:
    """Coordinates in F_q^{2n} of the V[Ω,Ξ] and W[Ω,Ξ] bases, in label order."""
    _check_chart_fits(c, n)
    return (
        [label_coordinate(label, n) for label in c.v_labels(n)],
        [label_coordinate(label, n) for label in c.w_labels(n)],
    )


def chart_membership(L: Subspace, c: ChartIndex, n: int) -> Optional[MatrixFq]:
    """
    Coordinates of L in the finite chart M_n[Ω, Ξ], or None when L is not a graph there.

    Rows of the result follow ``c.v_labels(n)``, columns ``c.w_labels(n)``.
    """
    if L.ambient_dim != 2 * n:
        raise AmbientMismatch(f"Subspace lives in dimension {L.ambient_dim}, expected {2 * n}")
    v_coords, w_coords = chart_coordinates(c, n)
    if L.dim != len(v_coords):
        return None
    basis = L.basis.entries
    on_v = MatrixFq(L.spec, basis[:, v_coords])
    try:
        lift = inverse(on_v)
    except Singular:
        return None
    return lift @ MatrixFq(L.spec, basis[:, w_coords])


def graph_subspace(T: MatrixFq, c: ChartIndex, n: int) -> Subspace:
    """The graph {v + vT : v in V[Ω,Ξ]} inside F_q^{2n}."""
    v_coords, w_coords = chart_coordinates(c, n)
    if T.shape != (len(v_coords), len(w_coords)):
        raise ValueError(f"Chart {c!r} at n={n} needs a {len(v_coords)}x{len(w_coords)} matrix, got {T.shape}")
    rows = np.zeros((len(v_coords), 2 * n), dtype=np.int64)
    rows[np.arange(len(v_coords)), v_coords] = 1
    rows[:, w_coords] = T.entries
    return row_space(MatrixFq(T.spec, rows))


def chart_transition(T: MatrixFq, source: ChartIndex, target: ChartIndex, n: int) -> Optional[MatrixFq]:
    """Re-express a point of M_n[source] in M_n[target], if it lies there."""
    return chart_membership(graph_subspace(T, source, n), target, n)


def finite_charts(n: int) -> List[ChartIndex]:
    """Charts M_n[Ω, Ξ] with Ω, Ξ ⊆ {1..n} and |Ω| = |Ξ|, by max index, then |Ω|."""
    charts = []
    indices = range(1, n + 1)
    for size in range(n + 1):
        for omega in combinations(indices, size):
            for xi in combinations(indices, size):
                charts.append(ChartIndex(omega=frozenset(omega), xi=frozenset(xi)))
    return sorted(charts, key=lambda c: c.sort_key)


def find_chart(L: Subspace, n: int) -> Optional[Tuple[ChartIndex, MatrixFq]]:
    for c in finite_charts(n):
        T = chart_membership(L, c, n)
        if T is not None:
            return c, T
    return None


class BlockMatrix(NamedTuple):
    a: MatrixFq
    b: MatrixFq
    c: MatrixFq
    d: MatrixFq


def split_blocks(g: MatrixFq) -> BlockMatrix:
    if g.rows != g.cols or g.rows % 2:
        raise ValueError(f"Expected a square matrix of even size, got {g.shape}")
    n = g.rows // 2
    first, second = slice(0, n), slice(n, 2 * n)
    return BlockMatrix(g.block(first, first), g.block(first, second), g.block(second, first), g.block(second, second))


def moebius_action(T: MatrixFq, g: MatrixFq) -> MatrixFq:
    """
    Image of the standard-chart point T under g = (a b; c d): (a + Tc)^{-1}(b + Td).

    Raises:
        Singular: a + Tc is not invertible, so graph(T)·g leaves the standard chart.
    """
    a, b, c, d = split_blocks(g)
    if T.shape != a.shape:
        raise ValueError(f"T has shape {T.shape}, blocks have shape {a.shape}")
    try:
        lift = inverse(a + T @ c)
    except Singular as e:
        raise Singular("a + Tc is singular; T lies outside the domain of g") from e
    return lift @ (b + T @ d)


def all_matrices(spec, rows: int, cols: int) -> Iterator[MatrixFq]:
    for values in product(range(spec.q), repeat=rows * cols):
        yield MatrixFq(spec, np.array(values, dtype=np.int64).reshape(rows, cols))


class MoebiusCensus(NamedTuple):
    domain: int
    image: int
    injective: bool


def moebius_census(g: MatrixFq) -> MoebiusCensus:
    """Size of the domain {det(a + Tc) != 0} of g, of its image, and whether g is injective there."""
    n = g.rows // 2
    a, _, c, _ = split_blocks(g)
    seen: Set[MatrixFq] = set()
    domain = 0
    for T in all_matrices(g.spec, n, n):
        if rank(a + T @ c) < n:
            continue
        domain += 1
        seen.add(moebius_action(T, g))
    return MoebiusCensus(domain=domain, image=len(seen), injective=len(seen) == domain)

