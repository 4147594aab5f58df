from itertools import combinations
from typing import List

import numpy as np

from semigrass.config import config
from semigrass.errors import ChartSearchExhausted, InvariantViolated, SpecMismatch, WindowTooSmall
from semigrass.fqlinalg import MatrixFq, Subspace, matmul_array, row_space, rref_array
from semigrass.gf import FieldSpec
from semigrass.grassmann.charts import chart_membership, graph_subspace
from semigrass.grassmann.schemas import ChartIndex
from semigrass.semiinf.group import window_matrix
from semigrass.semiinf.schemas import ChartPoint, StableGroupElement
from semigrass.utils import get_logger

logger = get_logger("semiinf")


def window_subspace(p: ChartPoint, n: int) -> Subspace:
    """L ∩ Y_n modulo X_n: the graph of T on the window of size n >= max index."""
    if n < p.max_index:
        raise WindowTooSmall(f"Window {n} is smaller than the support of {p!r} (max index {p.max_index})")
    return graph_subspace(p.matrix(n), p.chart, n)


def relative_dimension(p: ChartPoint) -> int:
    """
    dim(L ∩ W) - dim(V / p(L)).

    On a window of size n covering the support both terms shift by the rank of p(L),
    so the difference is dim π_n(L) - n.
    """
    n = p.max_index + 1
    return window_subspace(p, n).dim - n


def pi_n(p: ChartPoint, n: int) -> Subspace:
    """
    Truncation of p to F_q^{2n}.

    Raises:
        WindowTooSmall: n is below the largest index p mentions.
    """
    return window_subspace(p, n)


def same_subspace(p: ChartPoint, other: ChartPoint) -> bool:
    """Whether two chart points describe one subspace, possibly from different charts."""
    if p.spec != other.spec:
        raise SpecMismatch(f"{p.spec.describe()} vs {other.spec.describe()}")
    n = max(p.max_index, other.max_index)
    return pi_n(p, n) == pi_n(other, n)


####################
### CHART SEARCH ###
####################


def _full_column_rank(spec: FieldSpec, basis: np.ndarray, cols: List[int]) -> bool:
    return len(rref_array(spec, basis[:, cols])[1]) == len(cols)


def _spans(spec: FieldSpec, basis: np.ndarray, cols: List[int]) -> bool:
    return len(rref_array(spec, basis[:, cols])[1]) == basis.shape[0]


def _chart_bound_ok(L: Subspace, W: int, m: int) -> bool:
    """Some chart with indices in 1..m fits L: e_{>m} independent, f_{>m} avoidable."""
    basis = L.basis.entries
    tail_e = list(range(m, W))
    allowed = list(range(W)) + [W + j for j in range(m)]
    return _full_column_rank(L.spec, basis, tail_e) and _spans(L.spec, basis, allowed)


def first_chart(L: Subspace, W: int) -> ChartIndex:
    """
    The first chart in (max index, |Ω|, Ω, Ξ) order whose V-projection of L is bijective.

    For the least feasible max index m the Ω are tried by size, then
    lexicographically; Ξ is the greedy basis completion from f_1..f_m, which is the
    lexicographically least completion.
    """
    spec, basis = L.spec, L.basis.entries
    m = next((m for m in range(W + 1) if _chart_bound_ok(L, W, m)), None)
    if m is None:
        raise ChartSearchExhausted(f"No chart with indices up to {W} contains {L!r}")
    for size in range(m + 1):
        for omega in combinations(range(1, m + 1), size):
            v_cols = [i - 1 for i in range(1, W + 1) if i not in omega]
            if not _full_column_rank(spec, basis, v_cols):
                continue
            xi: List[int] = []
            for j in range(1, m + 1):
                if len(v_cols) == L.dim:
                    break
                candidate = v_cols + [W + j - 1]
                if _full_column_rank(spec, basis, candidate):
                    v_cols, xi = candidate, xi + [j]
            if len(v_cols) == L.dim:
                return ChartIndex(omega=frozenset(omega), xi=frozenset(xi))
    raise ChartSearchExhausted(f"No chart with max index {m} contains {L!r}")


def _image_on_window(p: ChartPoint, g: StableGroupElement, W: int):
    """L·g on the window W + |s|, with the images of the tail e_i (i > W) that land inside it."""
    s = g.shift_power
    W2 = W + abs(s)
    L = window_subspace(p, W)
    image = matmul_array(p.spec, L.basis.entries, window_matrix(g, W))
    tail = np.zeros((max(0, W2 - (W - s)), 2 * W2), dtype=np.int64)
    for row, j in enumerate(range(W - s + 1, W2 + 1)):
        tail[row, j - 1] = 1
    return row_space(MatrixFq(p.spec, np.vstack([image, tail]))), W2


def _act_on_window(p: ChartPoint, g: StableGroupElement, W: int) -> ChartPoint:
    Lg, W2 = _image_on_window(p, g, W)
    chart = first_chart(Lg, W2)
    T = chart_membership(Lg, chart, W2)
    if T is None:
        raise ChartSearchExhausted(f"{chart!r} was selected but does not contain the image")
    return ChartPoint.from_matrix(T, chart, W2)


def group_act(p: ChartPoint, g: StableGroupElement) -> ChartPoint:
    """
    The chart point of L·g, in the first chart by (max index, |Ω|) order.

    Works on the window max index + N + |s| + 1; with the debug window check on,
    the result is recomputed one step wider and compared.
    """
    if p.spec != g.spec:
        raise SpecMismatch(f"{p.spec.describe()} vs {g.spec.describe()}")
    W = p.max_index + g.N + abs(g.shift_power) + 1
    result = _act_on_window(p, g, W)
    if config.get_debug_window_check():
        logger.debug(f"Re-checking group_act on window {W + 1}")
        wider = _act_on_window(p, g, W + 1)
        if wider != result:
            raise InvariantViolated(f"group_act differs between windows {W} and {W + 1}: {result!r} vs {wider!r}")
    return result



def random_chart_point(spec: FieldSpec, chart: ChartIndex, n: int, rng: np.random.Generator) -> ChartPoint:
    """A point of ``chart`` whose entries are uniform on the window of size n."""
    rows, cols = len(chart.v_labels(n)), len(chart.w_labels(n))
    T = MatrixFq(spec, rng.integers(0, spec.q, size=(rows, cols), dtype=np.int64))
    return ChartPoint.from_matrix(T, chart, n)
