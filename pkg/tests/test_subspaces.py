"""Canonical subspaces: equality, lattice operations, transforms."""

import pytest

from symmspaces.linalg import Matrix
from symmspaces.rings import Scalar, TypeMismatch
from symmspaces.subspaces import Subspace


def cols(ring, rows):
    comps = {"R": 1, "C": 2, "H": 4}[ring]
    body = [[Scalar(ring, tuple([v] + [0] * (comps - 1))) for v in row]
            for row in rows]
    return Matrix.from_rows(ring, body)


def test_canonical_representation():
    a = Subspace(cols("R", [[1, 1], [0, 2], [1, 3]]))
    b = Subspace(cols("R", [[3, 2], [2, 2], [5, 4]]))
    assert a == b
    assert hash(a) == hash(b)
    assert a.dim == 2


def test_dependent_columns_dropped():
    a = Subspace(cols("R", [[1, 2], [1, 2]]))
    assert a.dim == 1


def test_coordinate_and_full():
    e = Subspace.coordinate("C", 4, [0, 2])
    assert e.dim == 2
    assert e.basis[0, 0] == 1 and e.basis[2, 1] == 1
    assert Subspace.full("R", 3).dim == 3
    assert Subspace.zero("R", 3).dim == 0


def test_contains():
    plane = Subspace(cols("R", [[1, 0], [0, 1], [0, 0]]))
    v = cols("R", [[2], [3], [0]])
    w = cols("R", [[0], [0], [1]])
    assert plane.contains_vector(v)
    assert not plane.contains_vector(w)
    line = Subspace(cols("R", [[1], [1], [0]]))
    assert plane.contains(line)
    assert not line.contains(plane)


def test_sum_and_intersection():
    a = Subspace(cols("R", [[1, 0], [0, 1], [0, 0], [0, 0]]))
    b = Subspace(cols("R", [[0, 0], [1, 0], [0, 1], [0, 0]]))
    assert a.sum(b).dim == 3
    meet = a.intersect(b)
    assert meet.dim == 1
    assert meet == Subspace(cols("R", [[0], [1], [0], [0]]))


def test_complement():
    a = Subspace.coordinate("R", 4, [0, 1])
    b = Subspace.coordinate("R", 4, [2, 3])
    c = Subspace.coordinate("R", 4, [1, 2])
    assert a.is_complement_of(b)
    assert not a.is_complement_of(c)
    assert not a.is_complement_of(a)


def test_transform():
    a = Subspace(cols("R", [[1], [0]]))
    rot = cols("R", [[0, -1], [1, 0]])
    assert a.transform(rot) == Subspace(cols("R", [[0], [1]]))


def test_quaternionic_span_is_right_module():
    j = Scalar("H", (0, 0, 1, 0))
    one = Scalar("H", (1, 0, 0, 0))
    zero = Scalar("H", (0, 0, 0, 0))
    line = Subspace(Matrix.from_rows("H", [[one], [j]]))
    scaled = Matrix.from_rows("H", [[j], [j * j]])
    assert line.contains_vector(scaled)


def test_ambient_mismatch():
    a = Subspace.coordinate("R", 4, [0])
    with pytest.raises(TypeMismatch):
        a.sum(Subspace.coordinate("R", 3, [0]))
