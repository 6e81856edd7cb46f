"""Point membership, group actions, and component bookkeeping."""

import pytest

from symmspaces import catalog
from symmspaces.spaces import (NotInGroup, NotStar, SpacePoint, act,
                               base_point, component_index, component_labels,
                               enumerate_component_points, membership,
                               sample_point)
from symmspaces.involutions import cayley_sample
from symmspaces.linalg import Matrix
from symmspaces.rings import NCOMP, Scalar, TypeMismatch
from symmspaces.subspaces import Subspace


FAMILY_REPS = [(1, {"p": 1, "q": 1}), (32, {"n": 2}), (40, {"n": 1}),
               (46, {"k": 1, "l": 1}), (52, {"p": 1, "q": 2})]


def test_base_points_are_members():
    for eid, prm in FAMILY_REPS:
        entry = catalog.build(eid, **prm)
        pt = base_point(entry)
        assert membership(entry, pt.q1, pt.q2), eid


def test_sampled_points_are_members():
    for eid, prm in FAMILY_REPS:
        entry = catalog.build(eid, **prm)
        for seed in range(3):
            pt = sample_point(entry, seed)
            assert membership(entry, pt.q1, pt.q2), (eid, seed)


def test_membership_rejects_non_complement():
    entry = catalog.build(3, n=2)
    q1 = entry.base_q1
    assert not membership(entry, q1, q1)


def test_membership_rejects_non_isotropic():
    entry = catalog.build(32, n=2)
    # e1 pairs with f1 under the split form, so this pick is not isotropic
    q1 = Subspace.coordinate("R", 4, [0, 2])
    q2 = Subspace.coordinate("R", 4, [1, 3])
    assert q1.is_complement_of(q2)
    assert not membership(entry, q1, q2)


def test_membership_rejects_wrong_swap_partner():
    entry = catalog.build(40, n=1)
    # q2 complements q1 but is not the image of q1 under the semiinvolution
    q1 = entry.base_q1
    one = Scalar(entry.ring, (1,) + (0,) * (NCOMP[entry.ring] - 1))
    diagonal = Subspace(Matrix.from_rows(entry.ring, [[one], [one]]))
    assert q1.is_complement_of(diagonal)
    assert not membership(entry, q1, diagonal)


def test_membership_rejects_non_orthocomplement():
    entry = catalog.build(45, p=1, q=1, m=1)
    one = Scalar("R", (1,))
    q1 = Subspace.coordinate("R", 2, [0])
    q2 = Subspace(Matrix.from_rows("R", [[one], [one]]))
    assert q1.is_complement_of(q2)
    assert not membership(entry, q1, q2)


def test_membership_rejects_wrong_dimensions():
    entry = catalog.build(52, p=1, q=2)
    q1 = Subspace.coordinate("R", 3, [0, 1])
    q2 = Subspace.coordinate("R", 3, [2])
    assert not membership(entry, q1, q2)
    assert membership(entry, q2, q1)


def test_membership_checks_ambient():
    entry = catalog.build(3, n=2)
    small = Subspace.coordinate("R", 2, [0])
    with pytest.raises(TypeMismatch):
        membership(entry, small, small)


def test_act_moves_and_guards():
    entry = catalog.build(3, n=2)
    g = cayley_sample(entry.G, 9)
    pt = act(entry, g, base_point(entry))
    assert membership(entry, pt.q1, pt.q2)
    with pytest.raises(NotInGroup):
        act(entry, Matrix.identity("R", 4) * 2, base_point(entry))


def test_sample_point_deterministic():
    entry = catalog.build(14, n=1)
    assert sample_point(entry, 4) == sample_point(entry, 4)
    assert sample_point(entry, 4) != sample_point(entry, 5)


def test_component_index_constant_on_orbits():
    entry = catalog.build(3, n=2)
    base = base_point(entry)
    label = component_index(entry, base)
    assert label in component_labels(entry)
    pt = base
    for seed in range(5):
        pt = act(entry, cayley_sample(entry.G, seed), pt)
        assert component_index(entry, pt) == label


def test_component_labels_family_one():
    entry = catalog.build(3, n=2)
    assert component_labels(entry) == [(0, 2), (1, 1), (2, 0)]


def test_component_labels_family_four():
    entry = catalog.build(45, p=1, q=1, m=1)
    assert component_labels(entry) == [(0, 1), (1, 0)]
    entry = catalog.build(45, p=2, q=1, m=2)
    assert component_labels(entry) == [(1, 1), (2, 0)]


def test_not_star_raises():
    entry = catalog.build(1, p=1, q=1)
    with pytest.raises(NotStar):
        component_labels(entry)
    with pytest.raises(NotStar):
        component_index(entry, base_point(entry))
    with pytest.raises(NotStar):
        enumerate_component_points(entry)


def test_enumerate_components_covers_all_labels():
    entry = catalog.build(3, n=2)
    points = enumerate_component_points(entry)
    assert len(points) == 4
    seen = set()
    for pt in points:
        assert membership(entry, pt.q1, pt.q2)
        seen.add(component_index(entry, pt))
    assert seen == set(component_labels(entry))

    entry = catalog.build(45, p=1, q=1, m=1)
    points = enumerate_component_points(entry)
    assert len(points) == 2
    seen = {component_index(entry, pt) for pt in points}
    assert seen == set(component_labels(entry))


def test_space_point_equality():
    q1 = Subspace.coordinate("R", 2, [0])
    q2 = Subspace.coordinate("R", 2, [1])
    assert SpacePoint(1, q1, q2) == SpacePoint(1, q1, q2)
    assert SpacePoint(1, q1, q2) != SpacePoint(1, q2, q1)
