from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordan_hopf.linalg import (
    SubspaceMod,
    coordinates,
    inverse_mod,
    kernel_basis,
    matmul_mod,
    rank,
    rref,
    rref_mod,
)
from jordan_hopf.scalars import FieldCfg

F5 = FieldCfg.prime(5)
QQ = FieldCfg.rational()

matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 4), min_size=n, max_size=n),
        min_size=1, max_size=4,
    )
)


def test_rref_mod_drops_zero_rows():
    m, pivots = rref_mod([[2, 4], [1, 2], [0, 0]], 5)
    assert m.tolist() == [[1, 2]]
    assert pivots == [0]
    empty, none = rref_mod(np.zeros((0, 3), dtype=np.int64), 5)
    assert empty.shape == (0, 3)
    assert none == []


def test_rational_rref_and_rank():
    rows = [[1, 2], [Fraction(1, 2), 1]]
    reduced, pivots = rref(rows, QQ)
    assert reduced == [[1, 2]]
    assert pivots == [0]
    assert rank(rows, QQ) == 1
    assert rank([[1, 2], [3, 1]], F5) == 1
    assert rank([], F5) == 0


def test_kernel_basis_has_one_in_free_columns():
    kernel = kernel_basis([[1, 1, 0]], F5, 3)
    assert kernel == [(4, 1, 0), (0, 0, 1)]
    assert kernel_basis([], QQ, 2) == [(1, 0), (0, 1)]


def test_coordinates():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert coordinates(basis, [2, 3, 0], F5) == [2, 3]
    assert coordinates(basis, [0, 0, 1], F5) is None
    assert coordinates(basis, [1, 1, 2], QQ) == [1, 1]


def test_inverse_mod():
    m = np.array([[1, 2], [3, 4]], dtype=np.int64)
    inv = inverse_mod(m, 5)
    assert (matmul_mod(m, inv, 5) == np.eye(2, dtype=np.int64)).all()
    with pytest.raises(ValueError):
        inverse_mod(np.array([[1, 2], [2, 4]], dtype=np.int64), 5)


def test_subspace_closure_under_a_shift():
    # shift e_i -> e_{i+1} generates everything from e_0
    shift = np.eye(4, k=1, dtype=np.int64)
    space = SubspaceMod(4, 5)
    space.add(np.array([[1, 0, 0, 0]]))
    assert space.close([shift]) == 4
    other = SubspaceMod(4, 5)
    other.add(np.array([[0, 0, 0, 1]]))
    assert other.close([shift]) == 1
    assert other.contains(np.array([0, 0, 0, 3]))
    assert not other.contains(np.array([1, 0, 0, 0]))


@given(matrices)
def test_rank_plus_nullity(rows):
    n_cols = len(rows[0])
    kernel = kernel_basis(rows, F5, n_cols)
    assert rank(rows, F5) + len(kernel) == n_cols
    m = np.array(rows, dtype=np.int64)
    for v in kernel:
        assert not (m @ np.array(v, dtype=np.int64) % 5).any()


@given(matrices)
def test_subspace_dimension_is_rank(rows):
    space = SubspaceMod(len(rows[0]), 5)
    space.add(np.array(rows, dtype=np.int64))
    assert space.dim == rank(rows, F5)
    for row in rows:
        assert space.contains(np.array(row, dtype=np.int64))
