"""Exact linear algebra over the three rings."""

from fractions import Fraction

import pytest

from symmspaces.linalg import (Matrix, Singular, block, block_diag, charpoly,
                               complexify, det, hstack, invert, is_invertible,
                               rank, reduced_column_echelon,
                               right_kernel_basis, solve, vstack)
from symmspaces.rings import Scalar, TypeMismatch


def m_int(ring, rows):
    comps = {"R": 1, "C": 2, "H": 4}[ring]
    body = [[Scalar(ring, tuple([v] + [0] * (comps - 1))) for v in row]
            for row in rows]
    return Matrix.from_rows(ring, body)


def test_builders():
    ident = Matrix.identity("R", 3)
    assert ident[1, 1] == 1 and ident[0, 1] == 0
    z = Matrix.zeros("C", 2, 3)
    assert z.is_zero() and z.rows == 2 and z.cols == 3


def test_shape_mismatch():
    a = m_int("R", [[1, 2]])
    b = m_int("R", [[1], [2], [3]])
    with pytest.raises(TypeMismatch):
        a @ b
    with pytest.raises(TypeMismatch):
        a + b


def test_product_and_transpose():
    a = m_int("R", [[1, 2], [3, 4]])
    b = m_int("R", [[0, 1], [1, 0]])
    assert (a @ b) == m_int("R", [[2, 1], [4, 3]])
    assert a.transpose() == m_int("R", [[1, 3], [2, 4]])
    c = a @ b - b @ a
    assert not c.is_zero()


def test_conj_transpose_reverses():
    i = Scalar("H", (0, 1, 0, 0))
    j = Scalar("H", (0, 0, 1, 0))
    a = Matrix.from_rows("H", [[i, j]])
    b = Matrix.from_rows("H", [[j], [i]])
    assert (a @ b).conj_transpose() == b.conj_transpose() @ a.conj_transpose()


def test_invert_exact():
    a = m_int("R", [[2, 1], [7, 4]])
    inv = invert(a)
    assert a @ inv == Matrix.identity("R", 2)
    assert inv @ a == Matrix.identity("R", 2)
    assert inv[0, 0] == 4


def test_singular_raises():
    a = m_int("R", [[1, 2], [2, 4]])
    assert not is_invertible(a)
    with pytest.raises(Singular):
        invert(a)


def test_quaternionic_inverse():
    i = Scalar("H", (0, 1, 0, 0))
    one = Scalar("H", (1, 0, 0, 0))
    a = Matrix.from_rows("H", [[one, i], [i * i, one + i]])
    if is_invertible(a):
        assert a @ invert(a) == Matrix.identity("H", 2)


def test_rank_and_kernel():
    a = m_int("R", [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(a) == 2
    kernel = right_kernel_basis(a)
    assert len(kernel) == 1
    for vec in kernel:
        assert (a @ vec).is_zero()


def test_solve():
    a = m_int("R", [[2, 0], [1, 1]])
    b = m_int("R", [[4], [5]])
    x = solve(a, b)
    assert a @ x == b


def test_det():
    assert det(m_int("R", [[2, 1], [1, 1]])) == 1
    assert det(m_int("R", [[1, 2], [2, 4]])).is_zero()


def test_charpoly_companion():
    # companion matrix of (t - 1)(t - 2) = t^2 - 3t + 2
    a = m_int("R", [[0, -2], [1, 3]])
    coeffs = charpoly(a)
    assert [str(c) for c in coeffs] == ["1", "-3", "2"]


def test_charpoly_rejects_quaternions():
    a = Matrix.identity("H", 2)
    with pytest.raises(TypeMismatch):
        charpoly(a)
    assert [str(c) for c in charpoly(complexify(a))][0] == "1"


def test_complexify_is_homomorphism():
    i = Scalar("H", (0, 1, 0, 0))
    j = Scalar("H", (0, 0, 1, 0))
    k = Scalar("H", (0, 0, 0, 1))
    a = Matrix.from_rows("H", [[i, j], [k, i + j]])
    b = Matrix.from_rows("H", [[j, k], [i, i * j]])
    assert complexify(a @ b) == complexify(a) @ complexify(b)
    assert complexify(a + b) == complexify(a) + complexify(b)


def test_block_and_stack():
    a = m_int("R", [[1]])
    b = m_int("R", [[2]])
    assert block([[a, b], [b, a]]) == m_int("R", [[1, 2], [2, 1]])
    assert block_diag(a, b) == m_int("R", [[1, 0], [0, 2]])
    assert hstack(a, b).cols == 2
    assert vstack(a, b).rows == 2


def test_echelon_canonical():
    spanning1 = m_int("R", [[1, 1], [2, 3], [0, 1]])
    spanning2 = m_int("R", [[2, 3], [4, 9], [0, 3]])
    assert reduced_column_echelon(spanning1) == reduced_column_echelon(spanning2)


def test_scale_by_fraction():
    a = m_int("R", [[3, 6]])
    half = Scalar("R", (Fraction(1, 2),))
    assert a.scale(half) == Matrix.from_rows(
        "R", [[Scalar("R", (Fraction(3, 2),)), Scalar("R", (3,))]])
