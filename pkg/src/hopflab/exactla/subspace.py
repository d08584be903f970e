"""Subspaces of k^n stored by their canonical reduced row echelon basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .fields import FieldMismatchError, FieldSpec
from .linalg import (
    Mat,
    RowReducer,
    inverse_rows,
    left_kernel_rows,
    mat_mul,
    rref_rows,
    to_sparse,
    transpose,
    unit_vector,
)


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    ambient_dim: int
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def span(cls, F: FieldSpec, n: int, vectors: Iterable) -> "Subspace":
        rows, piv = rref_rows(F, vectors, n)
        return cls(F, n, rows, piv)

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, (), ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, tuple(unit_vector(F, n, i) for i in range(n)), tuple(range(n)))

    @classmethod
    def coordinate(cls, F: FieldSpec, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span(F, n, [unit_vector(F, n, i) for i in sorted(set(indices))])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace") -> None:
        if other.field != self.field:
            raise FieldMismatchError("subspaces over different fields")
        if other.ambient_dim != self.ambient_dim:
            raise ValueError(f"ambient dimension mismatch {self.ambient_dim} vs {other.ambient_dim}")

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coordinates of v in the RREF basis, or None if v is not in the span."""
        F = self.field
        coords = tuple(v[p] for p in self.pivots)
        recon = [F.zero] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c != F.zero:
                for j, b in enumerate(row):
                    if b != F.zero:
                        recon[j] = F.add(recon[j], F.mul(c, b))
        if tuple(recon) != tuple(v):
            return None
        return coords

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def annihilator(self) -> "Subspace":
        """{f : f(u) = 0 for all u}, in the dual coordinates of equal dimension."""
        F, n = self.field, self.ambient_dim
        piv = set(self.pivots)
        vecs = []
        for j in range(n):
            if j in piv:
                continue
            v = [F.zero] * n
            v[j] = F.one
            for row, p in zip(self.basis, self.pivots):
                if row[j] != F.zero:
                    v[p] = F.neg(row[j])
            vecs.append(tuple(v))
        return Subspace.span(F, n, vecs)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.contains_subspace(other):
            return other
        if other.contains_subspace(self):
            return self
        return self.annihilator().sum(other.annihilator()).annihilator()

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)

    def image_under(self, M: Sequence[Sequence], ncols: int) -> "Subspace":
        """{u M : u in self}."""
        if not self.basis:
            return Subspace.zero(self.field, ncols)
        return Subspace.span(self.field, ncols, mat_mul(self.field, self.basis, M))

    def as_mat(self) -> Mat:
        return Mat(self.field, self.basis, self.ambient_dim)


def kernel(m: Mat) -> Subspace:
    """Left kernel {x : x m = 0}."""
    rows = left_kernel_rows(m.field, m.rows, m.ncols)
    return Subspace.span(m.field, m.nrows, rows)


def image(m: Mat) -> Subspace:
    """Row space of m."""
    return Subspace.span(m.field, m.ncols, m.rows)


def preimage(F: FieldSpec, M: Sequence[Sequence], ncols: int, W: Subspace) -> Subspace:
    """{x : x M in W} for an r x ncols matrix M."""
    nrows = len(M)
    ann = W.annihilator()
    if not ann.basis:
        return Subspace.full(F, nrows)
    test = mat_mul(F, M, transpose(ann.basis))
    return Subspace.span(F, nrows, left_kernel_rows(F, test, ann.dim))


def quotient_basis(W: Subspace, U: Subspace) -> tuple[Mat, Mat]:
    """Lift and projection realizing W/U.

    ``lift`` has one row per quotient coordinate (the rows of W's echelon
    basis whose pivot is not a pivot of U). ``project`` is an
    ambient_dim x dim(W/U) matrix; on W its kernel is exactly U, and
    lift @ project is the identity.
    """
    if not W.contains_subspace(U):
        raise ValueError("U is not contained in W")
    F, n = W.field, W.ambient_dim
    # pivots of U are pivots of W, so complements come straight from W's rows
    red = RowReducer(F, n)
    for row in U.basis:
        red.add(to_sparse(F, row))
    lift = []
    for row in W.basis:
        if red.add(to_sparse(F, row)) is None:
            lift.append(row)
    extra = []
    for j in range(n):
        e = unit_vector(F, n, j)
        if red.add(to_sparse(F, e)) is None:
            extra.append(e)
    full = list(U.basis) + lift + extra
    inv = inverse_rows(F, full)
    u, q = U.dim, len(lift)
    project = tuple(tuple(r[u:u + q]) for r in inv)
    return Mat(F, tuple(lift), n), Mat(F, project, q)
