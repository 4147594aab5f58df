"""
Jump probabilities of the averaging chain on orbit indices.

The finite model picks a uniform hyperplane K of L in Gr_{2n}^n, then a uniform
n-dimensional overspace M of K, and records how dim(M ∩ W) moves. As n grows the
three probabilities approach the rows of :class:`DeltaOperator`.
"""

from fractions import Fraction
from typing import List, NamedTuple, Tuple

import numpy as np
import sympy

from semigrass import consts
from semigrass.errors import ParameterOutOfRange, TooLarge
from semigrass.fqlinalg import Subspace, batch_rank, coordinate_subspace
from semigrass.gf import FieldSpec, field_of_order
from semigrass.grassmann.enumeration import hyperplanes, projective_points
from semigrass.qspecial import q_hahn
from semigrass.spectral.operators import delta_operator, hahn_operator
from semigrass.spectral.schemas import AveragingSpectrum, JumpProbabilities
from semigrass.utils import get_logger

logger = get_logger("spectral")


def _check_k(n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n:
        raise ParameterOutOfRange(f"Need n >= 1 and 0 <= k <= n, got n={n}, k={k}")


def jump_limits(k: int, q: int) -> JumpProbabilities:
    """The n -> infinity rows: ((1-q^{-k})^2, 2q^{-k}-q^{-2k}-q^{-2k-1}, q^{-2k-1})."""
    if k < 0:
        raise ParameterOutOfRange(f"k = {k} must be non-negative")
    down, stay, up = delta_operator(q).row(k)
    return JumpProbabilities(down=down, stay=stay, up=up)


def orbit_representative(spec: FieldSpec, n: int, k: int) -> Subspace:
    """span(e_{k+1}, ..., e_n, f_1, ..., f_k), a point of the orbit O_k(n)."""
    _check_k(n, k)
    return coordinate_subspace(spec, 2 * n, list(range(k, n)) + list(range(n, n + k)))


def jump_probabilities_bruteforce(n: int, k: int, q: int) -> JumpProbabilities:
    """
    Exact probabilities by running over every (hyperplane, overspace) pair.

    For each hyperplane K the overspaces K + span(v) are stacked and their
    V-projections ranked in one batch: dim(M ∩ W) = n - rank(M_V).
    """
    _check_k(n, k)
    spec = field_of_order(q)
    L = orbit_representative(spec, n, k)
    directions = np.array(list(projective_points(q, n + 1)), dtype=np.int64)
    tally = {-1: 0, 0: 0, 1: 0}
    pairs = 0
    for K in hyperplanes(L):
        free = [c for c in range(2 * n) if c not in set(K.pivots)]
        vectors = np.zeros((len(directions), 2 * n), dtype=np.int64)
        vectors[:, free] = directions
        stack = np.empty((len(directions), n, n), dtype=np.int64)
        stack[:, : n - 1, :] = K.basis.entries[None, :, :n]
        stack[:, n - 1, :] = vectors[:, :n]
        moves = (n - batch_rank(spec, stack)) - k
        for move, count in zip(*np.unique(moves, return_counts=True)):
            tally[int(move)] += int(count)
        pairs += len(directions)
    logger.debug(f"Classified {pairs} (hyperplane, overspace) pairs for n={n}, k={k}, q={q}")
    return JumpProbabilities(
        down=Fraction(tally[-1], pairs), stay=Fraction(tally[0], pairs), up=Fraction(tally[1], pairs)
    )


def jump_probabilities_exact(n: int, k: int, q: int) -> JumpProbabilities:
    """
    Closed form of the finite jump probabilities.

    K keeps L ∩ W with probability (q^{n-k}-1)/(q^n-1); M then gains a W-direction
    with probability (q^r-1)/(q^{n+1}-1), r = n - dim(K ∩ W).
    """
    _check_k(n, k)
    keeps = Fraction(q ** (n - k) - 1, q**n - 1)
    total = q ** (n + 1) - 1
    up = keeps * Fraction(q ** (n - k) - 1, total)
    down = (1 - keeps) * (1 - Fraction(q ** (n - k + 1) - 1, total))
    return JumpProbabilities(down=down, stay=1 - up - down, up=up)


########################
### AVERAGING MATRIX ###
########################


def _check_averaging_bounds(n: int, q: int) -> None:
    bound = consts.AVERAGING_MATRIX_BOUNDS.get(q, consts.AVERAGING_MATRIX_DEFAULT_BOUND)
    if n > bound:
        raise TooLarge(f"finite_averaging_matrix supports n <= {bound} at q={q}, got n={n}")


def averaging_rows(n: int, q: int) -> List[List[Fraction]]:
    """The (n+1) x (n+1) stochastic matrix P(k, k') built from brute-force jump rows."""
    _check_averaging_bounds(n, q)
    matrix = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        jumps = jump_probabilities_bruteforce(n, k, q)
        matrix[k][k] = jumps.stay
        if k > 0:
            matrix[k][k - 1] = jumps.down
        if k < n:
            matrix[k][k + 1] = jumps.up
    return matrix


def _to_sympy(matrix: List[List[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in matrix])


def _to_fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


class ExactEigendata(NamedTuple):
    charpoly: List[Fraction]
    factors: List[Tuple[List[Fraction], int]]
    roots: List[sympy.Expr]


def exact_eigendata(A: sympy.Matrix) -> ExactEigendata:
    """
    Characteristic polynomial of a rational matrix, its monic irreducible factors over Q
    with multiplicities, and every root with multiplicity.

    Irrational roots stay exact as radicals or ``CRootOf`` objects.
    """
    lam = sympy.Symbol("lam")
    poly = sympy.Poly(A.charpoly(lam).as_expr(), lam, domain="QQ")
    _, factor_list = poly.factor_list()
    factors = sorted(
        ([_to_fraction(c) for c in factor.monic().all_coeffs()], multiplicity)
        for factor, multiplicity in factor_list
    )
    return ExactEigendata(
        charpoly=[_to_fraction(c) for c in poly.all_coeffs()],
        factors=factors,
        roots=poly.all_roots(),
    )


def _krylov_rank(A: sympy.Matrix) -> int:
    size = A.rows
    v = sympy.zeros(size, 1)
    v[0] = 1
    krylov = [v]
    for _ in range(size - 1):
        krylov.append(A * krylov[-1])
    return sympy.Matrix.hstack(*krylov).rank()


def cyclic_span_dimension(n: int, q: int) -> int:
    """Dimension of span{A^t 1_{O_0} : t >= 0}; n+1 means the indicator is cyclic."""
    return _krylov_rank(_to_sympy(averaging_rows(n, q)))


def finite_averaging_matrix(n: int, q: int) -> AveragingSpectrum:
    """
    Exact eigendata of the finite averaging matrix beside the q-Hahn eigenvalues.

    The Q_j columns are compared through their Rayleigh residuals only; no identity
    between the two operators is asserted.
    """
    rows = averaging_rows(n, q)
    A = _to_sympy(rows)
    eigendata = exact_eigendata(A)
    rational = [_to_fraction(r) for r in eigendata.roots if r.is_Rational]
    eigenvalues_approx = sorted(np.real(np.linalg.eigvals(np.array(rows, dtype=np.float64))).tolist(), reverse=True)

    hahn = hahn_operator(n, q)
    dense = np.array(rows, dtype=np.float64)
    residuals = []
    for j in range(n + 1):
        Q = np.array([float(q_hahn(j, k, n, q)) for k in range(n + 1)])
        AQ = dense @ Q
        rho = float(Q @ AQ / (Q @ Q))
        residuals.append(float(np.linalg.norm(AQ - rho * Q) / np.linalg.norm(Q)))

    return AveragingSpectrum(
        n=n,
        q=q,
        matrix=rows,
        charpoly=eigendata.charpoly,
        charpoly_factors=eigendata.factors,
        eigenvalues_exact=[str(r) for r in eigendata.roots],
        rational_eigenvalues=sorted(rational, reverse=True),
        eigenvalues_approx=eigenvalues_approx,
        hahn_eigenvalues=[hahn.eigenvalue(j) for j in range(n + 1)],
        hahn_eigenvector_residuals_approx=residuals,
        cyclic_span_dimension=_krylov_rank(A),
    )


def is_stochastic(matrix: List[List[Fraction]]) -> bool:
    return all(sum(row, Fraction(0)) == 1 and all(x >= 0 for x in row) for row in matrix)
