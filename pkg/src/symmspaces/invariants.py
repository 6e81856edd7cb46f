"""Conjugation invariants of ordered pairs of points.

For points pt1 = (Q1, Q2) and pt2 = (R1, R2) of the same space, write R1
as the graph of M : Q1 -> Q2 and R2 as the graph of N : Q2 -> Q1.  The
composite NM is an operator on Q1 defined without any basis choice, so
its characteristic polynomial is invariant under the simultaneous action
of the ambient group on both points.  Over the quaternions the operator
is complexified first (degree doubles, coefficients come out real).

For a pair of point pairs on the projective line this reduces to the
classical cross ratio.
"""

from dataclasses import dataclass

from .rings import H, ONE, Scalar, from_rational
from .linalg import Matrix, Singular, charpoly, complexify, invert
from .subspaces import Subspace
from .charts import AngularCoords, Chart, NotTransverse, angular_operator
from . import spaces


@dataclass(frozen=True)
class DoubleRatio:
    """Monic charpoly of NM, coefficients highest degree first."""
    ring: str
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.coeffs[0] != Scalar(self.ring, ONE[self.ring]):
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def invariants(self):
        """The nonleading coefficients, the actual invariant tuple."""
        return self.coeffs[1:]


def _charpoly_ratio(product: Matrix) -> DoubleRatio:
    if product.ring == H:
        product = complexify(product)
    return DoubleRatio(product.ring, charpoly(product))


def double_ratio(entry, pt1: spaces.SpacePoint, pt2: spaces.SpacePoint) \
        -> DoubleRatio:
    """Charpoly of NM for pt2 written in the decomposition given by pt1.

    Raises NotTransverse when pt2's components fail to be graphs over
    pt1's decomposition.
    """
    m = angular_operator(pt2.q1, pt1.q1, pt1.q2)
    n = angular_operator(pt2.q2, pt1.q2, pt1.q1)
    return _charpoly_ratio(n @ m)


def double_ratio_from_coords(chart: Chart, c1: AngularCoords,
                             c2: AngularCoords) -> DoubleRatio:
    """The same invariant from angular coordinates in a common chart.

    Computes (1 - Y2 X1)^-1 (X2 - Y2) (1 - Y1 X2)^-1 (X1 - Y1) where
    (X1, X2) are the coordinates of the first point and (Y1, Y2) of the
    second; its charpoly agrees with the subspace-level computation.
    """
    x1, x2 = c1.m, c1.n
    y1, y2 = c2.m, c2.n
    ring = x1.ring
    k = x1.cols
    l = x1.rows
    ident_k = Matrix.identity(ring, k)
    ident_l = Matrix.identity(ring, l)
    try:
        left = invert(ident_k - y2 @ x1)
        mid = invert(ident_l - y1 @ x2)
    except Singular:
        raise NotTransverse("coordinate formula hit a pole")
    return _charpoly_ratio(left @ (x2 - y2) @ mid @ (x1 - y1))


def projective_point(ring, slope) -> Subspace:
    """The line spanned by (1, slope) in the plane."""
    if not isinstance(slope, Scalar):
        slope = Scalar(ring, from_rational(ring, slope))
    one = Scalar(ring, ONE[ring])
    return Subspace(Matrix.from_rows(ring, [[one], [slope]]))


def cross_ratio(x1, x2, x3, x4):
    """((x1-x3)(x2-x4)) / ((x1-x4)(x2-x3)) for scalars of one ring."""
    return (x1 - x3) * (x2 - x4) * ((x1 - x4) * (x2 - x3)).inv()
