import numpy as np
import pytest

from semigrass.errors import AmbientMismatch, NotASubspace, Singular, SpecMismatch
from semigrass.fqlinalg import (
    MatrixFq,
    batch_rank,
    contains,
    coordinate_subspace,
    full_space,
    inverse,
    is_invertible,
    is_subspace_of,
    kernel_basis,
    project,
    quotient_dim,
    rank,
    row_space,
    rref,
    span,
    subspace_intersection,
    subspace_sum,
    zero_subspace,
)


@pytest.fixture
def plane_f2(f2):
    return full_space(f2, 2)


############
### RREF ###
############


def test_rref_zero_matrix(f2):
    result = rref(MatrixFq.zeros(f2, 2, 3))
    assert result.reduced.is_zero()
    assert result.rank == 0
    assert result.pivots == []


def test_rref_identity(f2):
    result = rref(MatrixFq.identity(f2, 3))
    assert result.reduced == MatrixFq.identity(f2, 3)
    assert (result.rank, result.pivots) == (3, [0, 1, 2])


def test_rref_by_hand(f2):
    result = rref(MatrixFq.from_rows(f2, [[1, 1], [1, 1]]))
    assert result.reduced.tolist() == [[1, 1], [0, 0]]
    assert (result.rank, result.pivots) == (1, [0])


def test_rref_over_f4(f4):
    # x * (1, x) = (x, x + 1)
    result = rref(MatrixFq.from_rows(f4, [[2, 3], [1, 2]]))
    assert result.rank == 1
    assert result.reduced.tolist() == [[1, 2], [0, 0]]


def test_matrix_rejects_noncanonical_entries(f3):
    with pytest.raises(ValueError):
        MatrixFq.from_rows(f3, [[0, 3]])


def test_matmul_and_inverse(any_field, rng):
    for _ in range(20):
        m = MatrixFq(any_field, rng.integers(0, any_field.q, size=(4, 4)))
        if not is_invertible(m):
            with pytest.raises(Singular):
                inverse(m)
            continue
        assert m @ inverse(m) == MatrixFq.identity(any_field, 4)
        assert inverse(m) @ m == MatrixFq.identity(any_field, 4)


def test_mixed_fields_do_not_multiply(f2, f3):
    with pytest.raises(SpecMismatch):
        MatrixFq.identity(f2, 2) @ MatrixFq.identity(f3, 2)


def test_batch_rank_matches_rank(any_field, rng):
    stack = rng.integers(0, any_field.q, size=(50, 3, 5))
    stack[::7, 2] = stack[::7, 0]
    expected = [rank(MatrixFq(any_field, m)) for m in stack]
    assert batch_rank(any_field, stack).tolist() == expected


#################
### SUBSPACES ###
#################


def test_row_space_examples(f2):
    assert span(f2, 3, [[1, 0, 1], [1, 0, 1]]).dim == 1
    L = row_space(MatrixFq.from_rows(f2, [[0, 1, 1], [1, 0, 1]]))
    assert L.basis.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert row_space(MatrixFq.identity(f2, 3)) == full_space(f2, 3)


def test_kernel_basis_examples(f2):
    assert kernel_basis(MatrixFq.identity(f2, 3)) == zero_subspace(f2, 3)
    assert kernel_basis(MatrixFq.zeros(f2, 2, 3)) == full_space(f2, 2)
    assert kernel_basis(MatrixFq.from_rows(f2, [[1, 1], [1, 1]])) == span(f2, 2, [[1, 1]])


def test_kernel_vectors_annihilate(any_field, rng):
    m = MatrixFq(any_field, rng.integers(0, any_field.q, size=(5, 3)))
    K = kernel_basis(m)
    assert K.dim == 5 - rank(m)
    assert (K.basis @ m).is_zero()


def test_sum_and_intersection(f2, plane_f2):
    a = span(f2, 2, [[1, 0]])
    b = span(f2, 2, [[0, 1]])
    assert subspace_sum(a, zero_subspace(f2, 2)) == a
    assert subspace_sum(a, a) == a
    assert subspace_sum(a, b) == plane_f2
    assert subspace_intersection(a, a) == a
    assert subspace_intersection(a, b) == zero_subspace(f2, 2)
    assert subspace_intersection(plane_f2, span(f2, 2, [[1, 1]])) == span(f2, 2, [[1, 1]])


def test_dimension_formula(any_field, rng):
    for _ in range(10):
        a = row_space(MatrixFq(any_field, rng.integers(0, any_field.q, size=(3, 5))))
        b = row_space(MatrixFq(any_field, rng.integers(0, any_field.q, size=(3, 5))))
        assert subspace_sum(a, b).dim + subspace_intersection(a, b).dim == a.dim + b.dim


def test_membership_and_quotients(f2, plane_f2):
    line = span(f2, 2, [[1, 1]])
    assert contains(line, [0, 0])
    assert contains(line, [1, 1])
    assert not contains(line, [1, 0])
    assert quotient_dim(line, line) == 0
    assert quotient_dim(plane_f2, line) == 1
    assert is_subspace_of(line, plane_f2)
    with pytest.raises(NotASubspace):
        quotient_dim(line, plane_f2)


def test_ambient_mismatch(f2):
    with pytest.raises(AmbientMismatch):
        subspace_sum(full_space(f2, 2), full_space(f2, 3))
    with pytest.raises(AmbientMismatch):
        contains(full_space(f2, 2), [1, 0, 0])


def test_coordinate_subspace_and_project(f3):
    L = coordinate_subspace(f3, 4, [3, 1])
    assert L.pivots == [1, 3]
    assert project(L, [1, 3]) == MatrixFq.identity(f3, 2)
    assert np.array_equal(project(L, [0, 2]).entries, np.zeros((2, 2)))
