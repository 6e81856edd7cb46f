"""Subspaces of K^n as canonical column-reduced bases.

A Subspace stores the unique reduced column echelon basis of its span, so
two subspaces are equal iff their basis matrices are equal.  Over H the
span is a right submodule (coordinates multiply basis columns on the
right), which is the convention used throughout: operators act on the
left and never interfere with the span.
"""

from __future__ import annotations

from .linalg import Matrix, hstack, rank, reduced_column_echelon, right_kernel_basis
from .rings import ONE, TypeMismatch, check_ring


class Subspace:
    __slots__ = ("ring", "ambient_dim", "basis")

    def __init__(self, spanning: Matrix):
        """Span of the columns of `spanning`; dependent columns are dropped."""
        basis = reduced_column_echelon(spanning)
        object.__setattr__(self, "ring", spanning.ring)
        object.__setattr__(self, "ambient_dim", spanning.rows)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def from_columns(spanning: Matrix) -> "Subspace":
        return Subspace(spanning)

    @staticmethod
    def coordinate(ring, ambient_dim, indices) -> "Subspace":
        """Span of the coordinate vectors e_i for i in indices."""
        check_ring(ring)
        indices = sorted(set(indices))
        if indices and (indices[0] < 0 or indices[-1] >= ambient_dim):
            raise TypeMismatch("coordinate index out of range")
        cols = Matrix.zeros(ring, ambient_dim, len(indices)).to_lists()
        for j, i in enumerate(indices):
            cols[i][j] = ONE[ring]
        flat = [v for row in cols for v in row]
        return Subspace(Matrix(ring, ambient_dim, len(indices), flat))

    @staticmethod
    def full(ring, ambient_dim) -> "Subspace":
        return Subspace(Matrix.identity(ring, ambient_dim))

    @staticmethod
    def zero(ring, ambient_dim) -> "Subspace":
        return Subspace(Matrix.zeros(ring, ambient_dim, 0))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def _check_ambient(self, other: "Subspace"):
        if self.ring != other.ring or self.ambient_dim != other.ambient_dim:
            raise TypeMismatch("subspaces live in different ambient spaces")

    def contains_vector(self, v: Matrix) -> bool:
        if v.rows != self.ambient_dim or v.cols != 1:
            raise TypeMismatch("expected an ambient column vector")
        if self.dim == 0:
            return v.is_zero()
        return rank(hstack(self.basis, v)) == self.dim

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        if other.dim == 0:
            return True
        return rank(hstack(self.basis, other.basis)) == self.dim

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(hstack(self.basis, other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Kernel trick: pairs (x, y) with B1 x = B2 y give B1 x in the meet."""
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ring, self.ambient_dim)
        stacked = hstack(self.basis, -other.basis)
        kern = right_kernel_basis(stacked)
        if not kern:
            return Subspace.zero(self.ring, self.ambient_dim)
        cols = hstack(*[
            self.basis @ k.submatrix(range(self.dim), [0]) for k in kern
        ])
        return Subspace(cols)

    def is_complement_of(self, other: "Subspace") -> bool:
        """True when ambient = self (+) other as a direct sum."""
        self._check_ambient(other)
        if self.dim + other.dim != self.ambient_dim:
            return False
        if self.dim == 0 or other.dim == 0:
            return True
        return rank(hstack(self.basis, other.basis)) == self.ambient_dim

    def transform(self, g: Matrix) -> "Subspace":
        """Image under an operator acting on the left."""
        if g.cols != self.ambient_dim:
            raise TypeMismatch("operator does not act on this ambient space")
        return Subspace(g @ self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ring == other.ring
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ring, self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of %s^%d)" % (
            self.dim, self.ring, self.ambient_dim)
