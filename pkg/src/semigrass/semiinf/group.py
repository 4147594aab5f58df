"""
Group elements equal to a power of J outside a finite corner.

Basis vectors carry positions: pos(e_i) = 1 - i and pos(f_j) = j, so J^s moves
every position up by s and sends e_1 to f_1. A window of size W holds
e_1..e_W, f_1..f_W, laid out as the e-block followed by the f-block.
"""

from typing import Tuple

import numpy as np

from semigrass.errors import InvariantViolated, PreconditionViolated, SpecMismatch
from semigrass.fqlinalg import MatrixFq, inverse, is_invertible, matmul_array, rank, rref_array
from semigrass.gf import FieldSpec
from semigrass.grassmann.charts import split_blocks
from semigrass.semiinf.fredholm import fredholm_canonical_form, fredholm_index, stable_operator
from semigrass.semiinf.schemas import Factorization, StableGroupElement, StableOperator


def position_coordinate(pos: int, W: int) -> int:
    """Coordinate of the basis vector at position ``pos`` inside the window of size W."""
    if pos <= 0:
        if -pos >= W:
            raise ValueError(f"Position {pos} lies outside the window of size {W}")
        return -pos
    if pos > W:
        raise ValueError(f"Position {pos} lies outside the window of size {W}")
    return W + pos - 1


def shift_matrix(s: int, W: int) -> np.ndarray:
    """J^s from the window of size W into the window of size W + |s|."""
    W_out = W + abs(s)
    out = np.zeros((2 * W, 2 * W_out), dtype=np.int64)
    for i in range(1, W + 1):
        out[i - 1, position_coordinate(1 - i + s, W_out)] = 1
    for j in range(1, W + 1):
        out[W + j - 1, position_coordinate(j + s, W_out)] = 1
    return out


def window_restriction(arr: np.ndarray, W: int, W_big: int) -> np.ndarray:
    """Columns of the window W inside window W_big; every other column must vanish."""
    keep = list(range(W)) + [W_big + j for j in range(W)]
    rest = [c for c in range(2 * W_big) if c not in set(keep)]
    if np.any(arr[:, rest]):
        raise InvariantViolated(f"Image leaves the window of size {W}")
    return arr[:, keep]


def window_matrix(g: StableGroupElement, W: int) -> np.ndarray:
    """g on e_1..e_W, f_1..f_W; the image lands in the window of size W + |s|."""
    if W < g.N:
        raise ValueError(f"Window {W} is smaller than the corner window {g.N}")
    s = g.shift_power
    return matmul_array(g.spec, shift_matrix(s, W), g.padded_corner(W + abs(s)))


####################
### CONSTRUCTORS ###
####################


def element(corner: MatrixFq, shift_power: int = 0) -> StableGroupElement:
    return StableGroupElement(spec=corner.spec, shift_power=shift_power, corner=corner)


def identity(spec: FieldSpec) -> StableGroupElement:
    return element(MatrixFq.zeros(spec, 0, 0))


def shift(spec: FieldSpec, s: int) -> StableGroupElement:
    return element(MatrixFq.zeros(spec, 0, 0), s)


def J(spec: FieldSpec) -> StableGroupElement:
    return shift(spec, 1)


def parabolic_element(a: MatrixFq, b: MatrixFq, d: MatrixFq) -> StableGroupElement:
    """The block upper-triangular element (a b; 0 d); a and d invertible N x N."""
    if not (a.shape == b.shape == d.shape and a.rows == a.cols):
        raise ValueError(f"Blocks must share one square shape, got {a.shape}, {b.shape}, {d.shape}")
    if not (is_invertible(a) and is_invertible(d)):
        raise ValueError("Diagonal blocks of a parabolic element must be invertible")
    corner = np.block([[a.entries, b.entries], [np.zeros_like(a.entries), d.entries]])
    return element(MatrixFq(a.spec, corner))


def random_group_element(spec: FieldSpec, N: int, s: int, rng: np.random.Generator) -> StableGroupElement:
    """Uniform invertible corner of size N after J^s, by rejection."""
    while True:
        corner = MatrixFq(spec, rng.integers(0, spec.q, size=(2 * N, 2 * N), dtype=np.int64))
        if rank(corner) == 2 * N:
            return element(corner, s)


#################
### GROUP LAW ###
#################


def _conjugated_corner(g: StableGroupElement, t: int, W: int) -> np.ndarray:
    """J^{-t} · corner(g) · J^t written on the window W >= N(g) + |t|."""
    spec, T = g.spec, abs(t)
    through = matmul_array(spec, shift_matrix(-t, W), g.padded_corner(W + T))
    back = matmul_array(spec, through, shift_matrix(t, W + T))
    return window_restriction(back, W, W + 2 * T)


def compose(g: StableGroupElement, h: StableGroupElement) -> StableGroupElement:
    """x -> (x g) h, written as J^{s+t} followed by J^{-t} C_g J^t C_h."""
    if g.spec != h.spec:
        raise SpecMismatch(f"{g.spec.describe()} vs {h.spec.describe()}")
    t = h.shift_power
    W = max(g.N + abs(t), h.N)
    corner = matmul_array(g.spec, _conjugated_corner(g, t, W), h.padded_corner(W))
    return element(MatrixFq(g.spec, corner), g.shift_power + t)


def group_inverse(g: StableGroupElement) -> StableGroupElement:
    """C^{-1} J^{-s} = J^{-s} · (J^s C^{-1} J^{-s})."""
    s = g.shift_power
    undone = element(inverse(g.corner))
    W = g.N + abs(s)
    return element(MatrixFq(g.spec, _conjugated_corner(undone, -s, W)), -s)


##############
### BLOCKS ###
##############


def a_block(g: StableGroupElement) -> StableOperator:
    """ℓ -> ℓ part of g, stable with M = N + |s| and M' = M - s."""
    s = g.shift_power
    M = g.N + abs(s)
    M_prime = M - s
    image = window_matrix(g, M)[:M]
    W_out = M + abs(s)
    if np.any(image[:, M_prime:W_out]):
        raise InvariantViolated(f"a-block of {g!r} spills past e_{M_prime}")
    return stable_operator(MatrixFq(g.spec, image[:, :M_prime]))


def d_block(g: StableGroupElement) -> StableOperator:
    """
    ℓ° -> ℓ° part of g on finitely supported vectors, with M' = N + |s| and M = M' - s.

    It is the transpose of the column-finite block acting on ℓ, so its index is -θ(g).
    """
    s = g.shift_power
    M_prime = g.N + abs(s)
    M = M_prime - s
    W_out = M + abs(s)
    image = window_matrix(g, M)[M:]
    f_part = image[:, W_out:]
    if np.any(f_part[:, M_prime:]):
        raise InvariantViolated(f"d-block of {g!r} spills past f_{M_prime}")
    return stable_operator(MatrixFq(g.spec, f_part[:, :M_prime]))


def theta(g: StableGroupElement) -> int:
    """θ(g) = index of the a-block; always the shift power of the element."""
    value = fredholm_index(a_block(g))
    if value != g.shift_power:
        raise InvariantViolated(f"θ = {value} but the element shifts by {g.shift_power}")
    return value


def block_indices(g: StableGroupElement) -> Tuple[int, int]:
    """(ind a, ind d); they always sum to zero."""
    ind_a, ind_d = fredholm_index(a_block(g)), fredholm_index(d_block(g))
    if ind_a + ind_d != 0:
        raise InvariantViolated(f"ind a = {ind_a} and ind d = {ind_d} do not cancel")
    return ind_a, ind_d


def is_parabolic(g: StableGroupElement) -> bool:
    if g.shift_power != 0:
        return False
    return g.N == 0 or split_blocks(g.corner).c.is_zero()


def is_block_diagonal_on_l(g: StableGroupElement) -> bool:
    """g acts on ℓ alone: b and c vanish and d is the identity."""
    if g.shift_power != 0:
        return False
    if g.N == 0:
        return True
    _, b, c, d = split_blocks(g.corner)
    return b.is_zero() and c.is_zero() and d == MatrixFq.identity(g.spec, g.N)


#####################
### FACTORIZATION ###
#####################


def _block_diag(top: np.ndarray, N: int) -> np.ndarray:
    out = np.eye(2 * N, dtype=np.int64)
    out[:N, :N] = top
    return out


def factor_gl0(g: StableGroupElement) -> Factorization:
    """
    Split g with θ(g) = 0 as h · s · r.

    h acts on ℓ only, s is a finite corner and r is parabolic. The steps bring the
    a-block to (0 0; 0 1), clear the rest of the lower-left block, swap k
    independent f-rows into the first k e-rows, normalize, and clear what is left.
    """
    if theta(g) != 0:
        raise PreconditionViolated(f"factor_gl0 needs θ(g) = 0, got {g.shift_power}")
    spec, N = g.spec, g.N
    if N == 0:
        return Factorization(h=identity(spec), s=identity(spec), r=g)
    C = g.corner.entries
    a = split_blocks(g.corner).a

    canonical = fredholm_canonical_form(stable_operator(a))
    k = canonical.beta
    if k == 0:
        u, v = MatrixFq.identity(spec, N), inverse(a)
    else:
        u, v = inverse(canonical.left.corner), inverse(canonical.right.corner)
    g2 = matmul_array(spec, matmul_array(spec, _block_diag(u.entries, N), C), _block_diag(v.entries, N))

    # lower-left block is (p | q); the e-rows below k carry the identity, so q clears
    E2 = np.eye(2 * N, dtype=np.int64)
    E2[N:, k:N] = spec.neg(g2[N:, k:N])
    g3 = matmul_array(spec, E2, g2)

    _, chosen = rref_array(spec, g3[N:, :k].T)
    swap = np.arange(2 * N)
    for i, row in enumerate(chosen):
        swap[i], swap[N + row] = N + row, i
    Pi = np.eye(2 * N, dtype=np.int64)[swap]
    g4 = matmul_array(spec, Pi, g3)

    U4 = np.eye(2 * N, dtype=np.int64)
    U4[:k, :k] = inverse(MatrixFq(spec, g4[:k, :k])).entries
    g5 = matmul_array(spec, U4, g4)

    E5 = np.eye(2 * N, dtype=np.int64)
    E5[N:, :k] = spec.neg(g5[N:, :k])
    g6 = matmul_array(spec, E5, g5)

    h = element(MatrixFq(spec, _block_diag(inverse(u).entries, N)))
    finite = inverse(MatrixFq(spec, E2)) @ MatrixFq(spec, Pi) @ inverse(MatrixFq(spec, U4)) @ inverse(MatrixFq(spec, E5))
    r = element(MatrixFq(spec, matmul_array(spec, g6, _block_diag(inverse(v).entries, N))))
    result = Factorization(h=h, s=element(finite), r=r)

    if compose(compose(result.h, result.s), result.r) != g:
        raise InvariantViolated("h · s · r does not recompose to g")
    if not (is_block_diagonal_on_l(result.h) and is_parabolic(result.r)):
        raise InvariantViolated("Factorization has the wrong block shapes")
    return result
