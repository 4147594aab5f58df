from collections import Counter
from itertools import combinations, product
from typing import Dict, Iterator

import numpy as np

from semigrass.config import config
from semigrass.errors import AmbientMismatch, TooLarge
from semigrass.fqlinalg import (
    MatrixFq,
    Subspace,
    kernel_basis,
    matmul_array,
    row_space,
    rref_array,
    subspace_sum,
)
from semigrass.gf import FieldSpec
from semigrass.grassmann.counting import grassmannian_count
from semigrass.grassmann.schemas import GrassmannianSpec
from semigrass.utils import get_logger

logger = get_logger("grassmann")


def enumerate_subspaces(gspec: GrassmannianSpec) -> Iterator[Subspace]:
    """
    Yield every point of Gr_m^k exactly once.

    Pivot patterns come in lexicographic order; the free entries of each pattern
    run through an odometer over the field encodings.
    """
    spec, m, k = gspec.spec, gspec.m, gspec.k
    count = grassmannian_count(m, k, spec.q)
    cap = config.get_enumeration_cap()
    if count > cap:
        raise TooLarge(f"Gr_{m}^{k} over {spec.describe()} has {count} points, cap is {cap}")
    logger.debug(f"Enumerating {count} subspaces of Gr_{m}^{k} over {spec.describe()}")

    for pivots in combinations(range(m), k):
        pivot_set = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, m) if c not in pivot_set]
        template = np.zeros((k, m), dtype=np.int64)
        template[np.arange(k), list(pivots)] = 1
        for values in product(range(spec.q), repeat=len(free)):
            basis = template.copy()
            for (r, c), v in zip(free, values):
                basis[r, c] = v
            yield Subspace(spec, m, MatrixFq(spec, basis))


def orbit_index(L: Subspace, n: int) -> int:
    """dim(L ∩ W) for W spanned by the last n coordinates of F_q^{2n}."""
    if L.ambient_dim != 2 * n:
        raise AmbientMismatch(f"Subspace lives in dimension {L.ambient_dim}, expected {2 * n}")
    # L ∩ W is the kernel of the projection of L onto V
    projected = L.basis.entries[:, :n]
    return L.dim - len(rref_array(L.spec, projected)[1])


def orbit_tally(spec: FieldSpec, n: int) -> Dict[int, int]:
    """Count the points of Gr_{2n}^n by orbit index, by full enumeration."""
    gspec = GrassmannianSpec(spec=spec, m=2 * n, k=n)
    tally = Counter(orbit_index(L, n) for L in enumerate_subspaces(gspec))
    return {k: tally.get(k, 0) for k in range(n + 1)}


def projective_points(q: int, d: int) -> Iterator[np.ndarray]:
    """Nonzero vectors of F_q^d whose first nonzero entry is 1: one per line."""
    for lead in range(d):
        for tail in product(range(q), repeat=d - lead - 1):
            v = np.zeros(d, dtype=np.int64)
            v[lead] = 1
            v[lead + 1 :] = tail
            yield v


def hyperplane_from_functional(L: Subspace, functional: np.ndarray) -> Subspace:
    """The hyperplane of L cut out by a nonzero functional on its basis coordinates."""
    column = MatrixFq(L.spec, functional.reshape(-1, 1))
    coords = kernel_basis(column).basis.entries
    return row_space(MatrixFq(L.spec, matmul_array(L.spec, coords, L.basis.entries).reshape(-1, L.ambient_dim)))


def overspace_from_direction(K: Subspace, direction: np.ndarray) -> Subspace:
    """K + span(v) where v has ``direction`` on the non-pivot coordinates of K."""
    free = [c for c in range(K.ambient_dim) if c not in set(K.pivots)]
    v = np.zeros(K.ambient_dim, dtype=np.int64)
    v[free] = direction
    line = Subspace(K.spec, K.ambient_dim, MatrixFq(K.spec, v[None, :]))
    return subspace_sum(K, line)


def hyperplanes(L: Subspace) -> Iterator[Subspace]:
    """All (q^{dim L} - 1)/(q - 1) codimension-one subspaces of L."""
    if L.dim < 1:
        raise ValueError("The zero subspace has no hyperplanes")
    for functional in projective_points(L.spec.q, L.dim):
        yield hyperplane_from_functional(L, functional)


def overspaces(K: Subspace, m: int) -> Iterator[Subspace]:
    """All (q^{m - dim K} - 1)/(q - 1) subspaces of F_q^m containing K with one more dimension."""
    if K.ambient_dim != m:
        raise AmbientMismatch(f"Subspace lives in dimension {K.ambient_dim}, expected {m}")
    if K.dim > m - 1:
        raise ValueError("The full space has no overspaces")
    for direction in projective_points(K.spec.q, m - K.dim):
        yield overspace_from_direction(K, direction)
