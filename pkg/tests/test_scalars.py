"""Ring arithmetic in all three division rings."""

from fractions import Fraction

import pytest

from symmspaces.rings import (NCOMP, Scalar, TypeMismatch, from_rational,
                              is_central, promote, qnum, scalar_from_json,
                              scalar_to_json)


def s(ring, *parts):
    return Scalar(ring, parts)


def test_component_counts():
    assert NCOMP == {"R": 1, "C": 2, "H": 4}
    with pytest.raises(TypeMismatch):
        Scalar("C", (1,))
    with pytest.raises(TypeMismatch):
        Scalar("Q", (1,))


def test_rational_exactness():
    a = s("R", Fraction(1, 3))
    assert a + a + a == 1
    assert str(a) == "1/3"
    assert (a / a).parts == (qnum(1),)


def test_complex_multiplication():
    i = s("C", 0, 1)
    assert i * i == s("C", -1, 0)
    assert (s("C", 1, 2) * s("C", 3, -1)).parts == (qnum(5), qnum(5))


def test_quaternion_table():
    i, j, k = s("H", 0, 1, 0, 0), s("H", 0, 0, 1, 0), s("H", 0, 0, 0, 1)
    assert i * j == k
    assert j * i == -k
    assert j * k == i
    assert k * i == j
    assert i * i == j * j == k * k == s("H", -1, 0, 0, 0)


def test_conjugation_reverses_products():
    a = s("H", 1, 2, -1, 3)
    b = s("H", 0, -2, 5, 1)
    assert (a * b).conj() == b.conj() * a.conj()
    assert (a * a.conj()).is_real()


def test_inverse():
    a = s("H", 1, 1, 1, 1)
    one = s("H", 1, 0, 0, 0)
    assert a * a.inv() == one
    assert a.inv() * a == one
    with pytest.raises(ZeroDivisionError):
        s("H", 0, 0, 0, 0).inv()


def test_centrality():
    assert is_central("H", (Fraction(2), 0, 0, 0))
    assert not is_central("H", (0, 1, 0, 0))
    assert is_central("C", (0, 1))  # C is commutative
    assert s("R", 7).is_central()


def test_coercion_and_mixing():
    a = s("C", 1, 1)
    assert a + 1 == s("C", 2, 1)
    assert 2 * a == s("C", 2, 2)
    assert a - Fraction(1, 2) == s("C", Fraction(1, 2), 1)
    with pytest.raises(TypeMismatch):
        a + s("R", 1)


def test_promote():
    assert promote((qnum(3),), "R", "H") == (qnum(3), 0, 0, 0)
    with pytest.raises(TypeMismatch):
        promote((qnum(1), qnum(2)), "C", "R")


def test_json_round_trip():
    a = s("H", Fraction(-7, 2), 0, 1, Fraction(1, 3))
    data = scalar_to_json(a.parts)
    assert data == ["-7/2", "0", "1", "1/3"]
    assert scalar_from_json("H", data) == a.parts
    with pytest.raises(TypeMismatch):
        scalar_from_json("C", data)


def test_from_rational_strings():
    assert from_rational("C", "5/4") == (qnum(Fraction(5, 4)), 0)
