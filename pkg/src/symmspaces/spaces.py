"""Symmetric-space points as ordered pairs of complementary subspaces.

A point is an ordered pair (Q1, Q2) of subspaces of the ambient space,
subject to the conditions of the series family the entry belongs to:

  family 1  both maximal isotropic for the underlying form, swapped by
            the semiinvolution
  family 2  both maximal isotropic, otherwise independent
  family 3  complementary and swapped by the semiinvolution
  family 4  the managing form is nondegenerate on Q1 and Q2 is its
            orthocomplement
  family 5  complementary of fixed dimensions

The group of the entry acts by transforming both subspaces; for the ten
starred entries the realization splits into finitely many orbits told
apart by the inertia of the managing form restricted to Q1.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .rings import TypeMismatch
from .subspaces import Subspace
from .involutions import in_group, cayley_sample


class NotInGroup(Exception):
    """The matrix handed to act() fails the entry's membership test."""


class NotStar(Exception):
    """Component labels only exist for starred entries."""


@dataclass(frozen=True)
class SpacePoint:
    entry_id: int
    q1: Subspace
    q2: Subspace


def _check_ambient(entry, sub: Subspace):
    if sub.ring != entry.ring or sub.ambient_dim != entry.ambient_dim:
        raise TypeMismatch(
            "subspace lives in %s^%d, entry %d wants %s^%d"
            % (sub.ring, sub.ambient_dim, entry.id, entry.ring,
               entry.ambient_dim))


def membership(entry, q1: Subspace, q2: Subspace) -> bool:
    """Exact test of the pair conditions for the entry's family."""
    _check_ambient(entry, q1)
    _check_ambient(entry, q2)
    if not q1.is_complement_of(q2):
        return False
    fam = entry.list_no
    if fam in (1, 2):
        half = entry.ambient_dim // 2
        if q1.dim != half or q2.dim != half:
            return False
        if not entry.form_B.is_isotropic(q1):
            return False
        if not entry.form_B.is_isotropic(q2):
            return False
    if fam in (1, 3):
        if entry.semiinv_J.apply_to_subspace(q1) != q2:
            return False
    if fam == 4:
        if q1.dim != entry.subspace_dim:
            return False
        # nondegeneracy of D on Q1 and Q2 = orthocomplement are the two
        # equivalent readings; checking the orthocomplement covers both
        if entry.form_D.orthocomplement(q1) != q2:
            return False
    if fam == 5:
        if q1.dim != entry.params["p"] or q2.dim != entry.params["q"]:
            return False
    return True


def base_point(entry) -> SpacePoint:
    return SpacePoint(entry.id, entry.base_q1, entry.base_q2)


def act(entry, g, pt: SpacePoint) -> SpacePoint:
    """Move a point by a group element, checking membership of g first."""
    if not in_group(entry.G, g):
        raise NotInGroup("matrix is not in %s" % (entry.G.label or "G",))
    return SpacePoint(entry.id, pt.q1.transform(g), pt.q2.transform(g))


def sample_point(entry, seed) -> SpacePoint:
    """Deterministic random member: the base point moved by a sampled g."""
    g = cayley_sample(entry.G, seed)
    return act(entry, g, base_point(entry))


def component_index(entry, pt: SpacePoint):
    """Inertia pair of the managing form restricted to Q1.

    Constant along orbits, and the labels in a starred entry's union are
    exactly the values this can take.
    """
    if not entry.star:
        raise NotStar("entry %d is not starred" % entry.id)
    return entry.form_D.restrict(pt.q1).inertia()


def component_labels(entry):
    """All labels the starred entry's union ranges over."""
    if not entry.star:
        raise NotStar("entry %d is not starred" % entry.id)
    if entry.list_no == 1:
        m = entry.ambient_dim // 2
        return [(r, m - r) for r in range(m + 1)]
    m = entry.subspace_dim
    p, q = entry.params["p"], entry.params["q"]
    return [(r, m - r) for r in range(max(0, m - q), min(m, p) + 1)]


def enumerate_component_points(entry):
    """Explicit points reaching every component label of a starred entry.

    Family 1: pick, for each index i, either e_i or f_i from the split
    basis; the complementary picks form Q2 = J Q1.  The restricted form
    is diagonal with one sign per pick, so the 2^m patterns run through
    every inertia.  Family 4: coordinate subspaces of the diagonal form.
    """
    if not entry.star:
        raise NotStar("entry %d is not starred" % entry.id)
    points = []
    if entry.list_no == 1:
        m = entry.ambient_dim // 2
        for bits in product((0, 1), repeat=m):
            picks = [i + m * b for i, b in enumerate(bits)]
            rest = [i + m * (1 - b) for i, b in enumerate(bits)]
            q1 = Subspace.coordinate(entry.ring, 2 * m, picks)
            q2 = Subspace.coordinate(entry.ring, 2 * m, rest)
            points.append(SpacePoint(entry.id, q1, q2))
    else:
        n = entry.ambient_dim
        for picks in combinations(range(n), entry.subspace_dim):
            rest = [i for i in range(n) if i not in picks]
            q1 = Subspace.coordinate(entry.ring, n, picks)
            q2 = Subspace.coordinate(entry.ring, n, rest)
            points.append(SpacePoint(entry.id, q1, q2))
    return points
