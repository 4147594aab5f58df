from fractions import Fraction
from typing import List, Optional

import numpy as np

from semigrass.config import config
from semigrass.errors import ParameterOutOfRange
from semigrass.qspecial import alsalam_carlitz2, orbit_weight, q_hahn
from semigrass.spectral.operators import delta_operator, hahn_operator
from semigrass.spectral.schemas import ResidualRow, ResidualTable


def hahn_eigencheck(j: int, n: int, q: int) -> ResidualTable:
    """Residuals of the q-Hahn operator applied to Q_j, minus its eigenvalue times Q_j."""
    if not 0 <= j <= n:
        raise ParameterOutOfRange(f"Need 0 <= j <= n, got j={j}, n={n}")
    op = hahn_operator(n, q)
    eigenvalue = op.eigenvalue(j)
    values = [q_hahn(j, k, n, q) for k in range(n + 1)]
    rows = [
        ResidualRow(k=k, value=values[k], residual=op.apply(values.__getitem__, k) - eigenvalue * values[k])
        for k in range(n + 1)
    ]
    return ResidualTable(family="q-hahn", j=j, eigenvalue=eigenvalue, rows=rows)


def asc_eigencheck(j: int, q: int, K: Optional[int] = None) -> ResidualTable:
    """Residuals (Δ V_j - q^{-j} V_j)(k) for k < K; needs V_j up to index K."""
    K = K if K is not None else config.get_truncation()
    if j < 0 or K < 1:
        raise ParameterOutOfRange(f"Need j >= 0 and K >= 1, got j={j}, K={K}")
    op = delta_operator(q)
    eigenvalue = op.eigenvalue(j)
    values = [alsalam_carlitz2(j, k, q) for k in range(K + 1)]
    rows = [
        ResidualRow(k=k, value=values[k], residual=op.apply(values.__getitem__, k) - eigenvalue * values[k])
        for k in range(K)
    ]
    return ResidualTable(family="al-salam-carlitz", j=j, eigenvalue=eigenvalue, rows=rows)


def detailed_balance_check(q: int, K: Optional[int] = None) -> bool:
    """w(k) up(k) == w(k+1) down(k+1) for every k < K."""
    K = K if K is not None else config.get_truncation()
    op = delta_operator(q)
    return all(orbit_weight(k, q) * op.up(k) == orbit_weight(k + 1, q) * op.down(k + 1) for k in range(K))


def symmetrized_kernel(q: int, K: Optional[int] = None) -> List[List[Fraction]]:
    """The K x K truncation of w(k) P(k, k'), symmetric exactly when detailed balance holds."""
    K = K if K is not None else config.get_truncation()
    kernel = delta_operator(q).matrix(K)
    return [[orbit_weight(k, q) * entry for entry in row] for k, row in enumerate(kernel)]


def is_symmetric(matrix: List[List[Fraction]]) -> bool:
    size = len(matrix)
    return all(matrix[i][j] == matrix[j][i] for i in range(size) for j in range(i + 1, size))


def asc_gram_matrix(q: int, jmax: int, K: Optional[int] = None) -> np.ndarray:
    """
    Normalized Gram matrix of V_0..V_jmax in the weighted space, summed over k <= K.

    Sums are exact; only the final normalization is done in floating point.
    """
    K = K if K is not None else config.get_orthogonality_truncation()
    weights = [orbit_weight(k, q) for k in range(K + 1)]
    values = [[alsalam_carlitz2(j, k, q) for k in range(K + 1)] for j in range(jmax + 1)]
    exact = [
        [sum((w * a * b for w, a, b in zip(weights, values[i], values[j])), Fraction(0)) for j in range(jmax + 1)]
        for i in range(jmax + 1)
    ]
    gram = np.empty((jmax + 1, jmax + 1), dtype=np.float64)
    for i in range(jmax + 1):
        for j in range(jmax + 1):
            gram[i, j] = float(exact[i][j] / (exact[i][i] * exact[j][j]) ** 0.5) if i != j else 1.0
    return gram
