"""
Fredholm calculus for stable operators on ℓ.

The index is dim ker - dim coker throughout. With that sign the shift J has
θ(J) = +1 and the relative dimension of V·J is +1.
"""

import numpy as np

from semigrass.errors import InvariantViolated, SpecMismatch
from semigrass.fqlinalg import MatrixFq, inverse, rank, rref_array
from semigrass.gf import FieldSpec
from semigrass.semiinf.schemas import CanonicalForm, StableOperator


def stable_operator(corner: MatrixFq) -> StableOperator:
    return StableOperator(spec=corner.spec, corner=corner)


def identity_operator(spec: FieldSpec) -> StableOperator:
    return stable_operator(MatrixFq.zeros(spec, 0, 0))


def j_form(spec: FieldSpec, M: int, M_prime: int, r: int) -> StableOperator:
    """The M x M' corner (0 0; 0 I_r)."""
    if not 0 <= r <= min(M, M_prime):
        raise ValueError(f"Rank {r} does not fit an {M}x{M_prime} corner")
    out = np.zeros((M, M_prime), dtype=np.int64)
    out[M - r + np.arange(r), M_prime - r + np.arange(r)] = 1
    return stable_operator(MatrixFq(spec, out))


def kernel_dim(A: StableOperator) -> int:
    return A.M - rank(A.corner)


def cokernel_dim(A: StableOperator) -> int:
    return A.M_prime - rank(A.corner)


def fredholm_index(A: StableOperator) -> int:
    index = kernel_dim(A) - cokernel_dim(A)
    if index != A.M - A.M_prime:
        raise InvariantViolated(f"Index {index} of an {A.M}x{A.M_prime} corner")
    return index


def fredholm_compose(A: StableOperator, B: StableOperator) -> StableOperator:
    """x -> (x A) B, with both corners padded to the window max(M'_A, M_B) before multiplying."""
    if A.spec != B.spec:
        raise SpecMismatch(f"{A.spec.describe()} vs {B.spec.describe()}")
    W = max(A.M_prime, B.M)
    left, right = A.padded(W - A.M_prime), B.padded(W - B.M)
    return stable_operator(left.corner @ right.corner)


def fredholm_canonical_form(A: StableOperator) -> CanonicalForm:
    """
    Write A = g1 · J · g2 with g1 (M x M) and g2 (M' x M') invertible.

    Row reduction gives P with P·C in echelon form, its zero rows moved first;
    a column permutation and one elimination Q then bring P·C·Q to (0 0; 0 I_r).
    """
    spec, C = A.spec, A.corner
    M, M_prime = A.M, A.M_prime
    reduced, _ = rref_array(spec, np.hstack([C.entries, np.eye(M, dtype=np.int64)]))
    echelon, transform = reduced[:, :M_prime], reduced[:, M_prime:]
    r = rank(C)
    order = list(range(r, M)) + list(range(r))
    P = transform[order]
    top = echelon[:r]

    pivots = [int(np.nonzero(row)[0][0]) for row in top]
    free = [c for c in range(M_prime) if c not in set(pivots)]
    Q0 = np.zeros((M_prime, M_prime), dtype=np.int64)
    Q0[free + pivots, np.arange(M_prime)] = 1
    alpha = M_prime - r
    Q1 = np.eye(M_prime, dtype=np.int64)
    Q1[alpha:, :alpha] = spec.neg(top[:, free])
    Q = MatrixFq(spec, Q0) @ MatrixFq(spec, Q1)

    left = stable_operator(inverse(MatrixFq(spec, P)))
    middle = j_form(spec, M, M_prime, r)
    right = stable_operator(inverse(Q))
    if fredholm_compose(fredholm_compose(left, middle), right) != A:
        raise InvariantViolated("Canonical form does not recompose to its operator")
    return CanonicalForm(left=left, middle=middle, right=right, alpha=alpha, beta=M - r)


def random_stable_operator(spec: FieldSpec, M: int, M_prime: int, rng: np.random.Generator) -> StableOperator:
    return stable_operator(MatrixFq(spec, rng.integers(0, spec.q, size=(M, M_prime), dtype=np.int64)))
