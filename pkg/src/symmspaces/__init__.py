"""Exact models of the classical symmetric-space series.

All 54 series are realized as pairs of complementary subspaces of a
vector space over R, C, or the quaternions, with exact rational
arithmetic throughout: forms, semiinvolutions, group descriptors,
angular-operator charts, and the double-ratio invariant.
"""

from .rings import Scalar, TypeMismatch
from .linalg import Matrix, Singular
from .subspaces import Subspace
from .forms import Form, FormType, NotConsistent, NotSplit
from .involutions import GroupDescriptor, Semiinvolution
from .catalog import (BadParams, NotInUDprime, SeriesEntry, STAR_IDS,
                      build, param_names, render_table, stabilizer_embed,
                      valid_params, verify_entry)
from .spaces import NotInGroup, NotStar, SpacePoint
from .charts import AngularCoords, Chart, ChartBoundary, NotTransverse, ShapeViolation
from .invariants import DoubleRatio, cross_ratio, double_ratio

__version__ = "0.1.0"

__all__ = [
    "AngularCoords", "BadParams", "Chart", "ChartBoundary", "DoubleRatio",
    "Form", "FormType", "GroupDescriptor", "Matrix", "NotConsistent",
    "NotInGroup", "NotInUDprime", "NotSplit", "NotStar", "NotTransverse",
    "Scalar", "Semiinvolution", "SeriesEntry", "ShapeViolation", "Singular",
    "SpacePoint", "STAR_IDS", "Subspace", "TypeMismatch", "build",
    "cross_ratio", "double_ratio", "param_names", "render_table",
    "stabilizer_embed", "valid_params", "verify_entry",
]
