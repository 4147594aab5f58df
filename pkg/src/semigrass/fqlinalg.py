"""
Dense matrices and canonical subspaces over F_q.

Vectors are rows. A :class:`Subspace` is always stored as the reduced row echelon
form of a spanning matrix with its zero rows removed, so equal subspaces compare
equal entry by entry.
"""

from collections import namedtuple
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np

from semigrass.errors import AmbientMismatch, NotASubspace, Singular, SpecMismatch
from semigrass.gf import FieldElement, FieldSpec

RrefResult = namedtuple("RrefResult", "reduced rank pivots")


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MatrixFq:
    spec: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"MatrixFq needs a 2-D grid, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.spec.q):
            raise ValueError(f"Entries are not canonical elements of {self.spec.describe()}")
        object.__setattr__(self, "entries", _freeze(arr))

    @classmethod
    def from_rows(
        cls, spec: FieldSpec, rows: Sequence[Sequence[int]], cols: Optional[int] = None
    ) -> "MatrixFq":
        if len(rows) == 0:
            return cls.zeros(spec, 0, cols or 0)
        return cls(spec, np.array([[int(x) for x in row] for row in rows], dtype=np.int64))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "MatrixFq":
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MatrixFq":
        return cls(spec, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def T(self) -> "MatrixFq":
        return MatrixFq(self.spec, self.entries.T)

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.spec, int(self.entries[i, j]))

    def block(self, rows, cols) -> "MatrixFq":
        return MatrixFq(self.spec, self.entries[np.ix_(_as_index(rows, self.rows), _as_index(cols, self.cols))])

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def tolist(self) -> List[List[int]]:
        return self.entries.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixFq({self.spec.describe()}, {self.tolist()})"

    def __add__(self, other: "MatrixFq") -> "MatrixFq":
        _check_same(self.spec, other.spec)
        return MatrixFq(self.spec, self.spec.add(self.entries, other.entries))

    def __sub__(self, other: "MatrixFq") -> "MatrixFq":
        _check_same(self.spec, other.spec)
        return MatrixFq(self.spec, self.spec.sub(self.entries, other.entries))

    def __neg__(self) -> "MatrixFq":
        return MatrixFq(self.spec, self.spec.neg(self.entries))

    def __matmul__(self, other: "MatrixFq") -> "MatrixFq":
        _check_same(self.spec, other.spec)
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        return MatrixFq(self.spec, matmul_array(self.spec, self.entries, other.entries))


def _as_index(sel, n: int) -> np.ndarray:
    if isinstance(sel, slice):
        return np.arange(n)[sel]
    return np.asarray(list(sel), dtype=np.int64)


def _check_same(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise SpecMismatch(f"{a.describe()} vs {b.describe()}")


###############
### KERNELS ###
###############


def matmul_array(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if spec.is_prime_field:
        return (a @ b) % spec.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = spec.add(out, spec.mul(a[:, t : t + 1], b[t : t + 1, :]))
    return np.asarray(out, dtype=np.int64)


def rref_array(spec: FieldSpec, arr: np.ndarray):
    a = np.array(arr, dtype=np.int64)
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = spec.mul(a[r], spec.inv(int(a[r, c])))
        factors = a[:, c].copy()
        factors[r] = 0
        if np.any(factors):
            a = np.asarray(spec.sub(a, spec.mul(factors[:, None], a[r][None, :])), dtype=np.int64)
        pivots.append(c)
        r += 1
    return a, pivots


def batch_rank(spec: FieldSpec, stack: np.ndarray) -> np.ndarray:
    """Ranks of a (batch, rows, cols) stack, eliminated in lockstep across the batch."""
    a = np.array(stack, dtype=np.int64)
    if a.ndim != 3:
        raise ValueError(f"Expected a 3-D stack, got shape {a.shape}")
    batch, rows, cols = a.shape
    rank = np.zeros(batch, dtype=np.int64)
    active = np.ones((batch, rows), dtype=bool)
    idx = np.arange(batch)
    for c in range(cols):
        cand = active & (a[:, :, c] != 0)
        has = cand.any(axis=1)
        if not has.any():
            continue
        pr = np.argmax(cand, axis=1)
        pivot_rows = a[idx, pr]
        pivot_val = np.where(has, pivot_rows[:, c], 1)
        pivot_rows = spec.mul(pivot_rows, spec.inv(pivot_val)[:, None])
        factors = np.where(active & has[:, None], a[:, :, c], 0)
        factors[idx, pr] = 0
        a = np.asarray(spec.sub(a, spec.mul(factors[:, :, None], pivot_rows[:, None, :])), dtype=np.int64)
        active[idx[has], pr[has]] = False
        rank += has
    return rank


def rref(m: MatrixFq) -> RrefResult:
    reduced, pivots = rref_array(m.spec, m.entries)
    return RrefResult(MatrixFq(m.spec, reduced), len(pivots), pivots)


def rank(m: MatrixFq) -> int:
    return len(rref_array(m.spec, m.entries)[1])


def inverse(m: MatrixFq) -> MatrixFq:
    if m.rows != m.cols:
        raise Singular(f"Non-square {m.shape} matrix has no inverse")
    n = m.rows
    augmented = np.hstack([m.entries, np.eye(n, dtype=np.int64)])
    reduced, pivots = rref_array(m.spec, augmented)
    if pivots[:n] != list(range(n)):
        raise Singular("Matrix is singular")
    return MatrixFq(m.spec, reduced[:, n:])


def is_invertible(m: MatrixFq) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


#################
### SUBSPACES ###
#################


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    Row space of ``basis``, a reduced row echelon matrix without zero rows.

    Build these with :func:`row_space`; the constructor trusts its input.
    """

    spec: FieldSpec
    ambient_dim: int
    basis: MatrixFq

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise AmbientMismatch(
                f"Basis has {self.basis.cols} columns, ambient dimension is {self.ambient_dim}"
            )

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> List[int]:
        return [int(np.nonzero(row)[0][0]) for row in self.basis.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in {self.spec.describe()}^{self.ambient_dim}, {self.basis.tolist()})"


def row_space(m: MatrixFq) -> Subspace:
    reduced, pivots = rref_array(m.spec, m.entries)
    return Subspace(m.spec, m.cols, MatrixFq(m.spec, reduced[: len(pivots)]))


def span(spec: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> Subspace:
    return row_space(MatrixFq.from_rows(spec, list(vectors), ambient_dim))


def zero_subspace(spec: FieldSpec, m: int) -> Subspace:
    return Subspace(spec, m, MatrixFq.zeros(spec, 0, m))


def full_space(spec: FieldSpec, m: int) -> Subspace:
    return Subspace(spec, m, MatrixFq.identity(spec, m))


def coordinate_subspace(spec: FieldSpec, m: int, coordinates: Iterable[int]) -> Subspace:
    """Span of the unit vectors at the given zero-based coordinates."""
    coords = sorted(set(coordinates))
    basis = np.zeros((len(coords), m), dtype=np.int64)
    basis[np.arange(len(coords)), coords] = 1
    return Subspace(spec, m, MatrixFq(spec, basis))


def kernel_basis(m: MatrixFq) -> Subspace:
    """Left kernel: row vectors v with v·m = 0."""
    n = m.rows
    augmented = np.hstack([m.entries, np.eye(n, dtype=np.int64)])
    reduced, pivots = rref_array(m.spec, augmented)
    r = sum(1 for c in pivots if c < m.cols)
    return row_space(MatrixFq(m.spec, reduced[r:, m.cols :]))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    _check_same(a.spec, b.spec)
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(f"Ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return row_space(MatrixFq(a.spec, np.vstack([a.basis.entries, b.basis.entries])))


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return zero_subspace(a.spec, a.ambient_dim)
    stacked = MatrixFq(a.spec, np.vstack([a.basis.entries, b.basis.entries]))
    relations = kernel_basis(stacked).basis.entries
    # u·[A; B] = 0 means u_A·A = -u_B·B lies in both
    common = matmul_array(a.spec, relations[:, : a.dim], a.basis.entries)
    return row_space(MatrixFq(a.spec, common.reshape(-1, a.ambient_dim)))


def contains(s: Subspace, v: Sequence[int]) -> bool:
    vec = np.asarray([int(x) for x in v], dtype=np.int64)
    if vec.shape != (s.ambient_dim,):
        raise AmbientMismatch(f"Vector of length {vec.shape[0]} in ambient dimension {s.ambient_dim}")
    if not np.any(vec):
        return True
    stacked = np.vstack([s.basis.entries, vec[None, :]])
    return len(rref_array(s.spec, stacked)[1]) == s.dim


def is_subspace_of(small: Subspace, big: Subspace) -> bool:
    _check_ambient(small, big)
    return subspace_sum(small, big).dim == big.dim


def quotient_dim(big: Subspace, small: Subspace) -> int:
    if not is_subspace_of(small, big):
        raise NotASubspace("quotient_dim needs small ⊆ big")
    return big.dim - small.dim


def project(s: Subspace, coordinates: Sequence[int]) -> MatrixFq:
    """Basis of ``s`` restricted to the given columns (not reduced)."""
    return MatrixFq(s.spec, s.basis.entries[:, list(coordinates)])
