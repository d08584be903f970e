"""Row reduction, kernels and matrix helpers.

Conventions: vectors are rows; a matrix M with r rows and c columns is the
linear map x -> x M from k^r to k^c. ``kernel`` therefore means the left
kernel {x : x M = 0} and ``image`` the row space.

Elimination runs on sparse dict rows internally. Pivoting is deterministic:
each new independent row gets its first nonzero column as pivot, and rows
are fed in index order, so the final reduced echelon form is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import FieldMismatchError, FieldSpec, Scalar


def to_sparse(F: FieldSpec, row: Sequence) -> dict:
    z = F.zero
    return {i: v for i, v in enumerate(row) if v != z}


def to_dense(F: FieldSpec, row: dict, n: int) -> tuple:
    out = [F.zero] * n
    for i, v in row.items():
        out[i] = v
    return tuple(out)


class RowReducer:
    """Incrementally maintained reduced row echelon form.

    Columns at index >= ``ncols`` are carried along but never used as
    pivots; this is how kernels are extracted from augmented rows.
    """

    def __init__(self, F: FieldSpec, ncols: int):
        self.F = F
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        F = self.F
        sub, mul, zero = F.sub, F.mul, F.zero
        pivots = self.pivots
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if f is None:
                continue
            for k, v in pivots[c].items():
                nv = sub(row.get(k, zero), mul(f, v))
                if nv == zero:
                    row.pop(k, None)
                else:
                    row[k] = nv
        return row

    def add(self, row: dict) -> dict | None:
        """Insert a row. Returns None if it became a new pivot row, otherwise
        the reduced remainder (empty when dependent, or carrying only
        columns >= ncols)."""
        F = self.F
        r = self.reduce(dict(row))
        lead = [k for k in r if k < self.ncols]
        if not lead:
            return r
        c = min(lead)
        inv = F.inv(r[c])
        mul, sub, zero = F.mul, F.sub, F.zero
        r = {k: mul(v, inv) for k, v in r.items()}
        for prow in self.pivots.values():
            f = prow.get(c)
            if f is None:
                continue
            for k, v in r.items():
                nv = sub(prow.get(k, zero), mul(f, v))
                if nv == zero:
                    prow.pop(k, None)
                else:
                    prow[k] = nv
        self.pivots[c] = r
        return None

    def contains(self, row: dict) -> bool:
        r = self.reduce(dict(row))
        return not any(k < self.ncols for k in r)

    def rows(self, n: int | None = None) -> list[tuple]:
        n = self.ncols if n is None else n
        return [to_dense(self.F, self.pivots[c], n) for c in sorted(self.pivots)]

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(sorted(self.pivots))


def rref_rows(F: FieldSpec, rows: Iterable, ncols: int) -> tuple[tuple[tuple, ...], tuple[int, ...]]:
    red = RowReducer(F, ncols)
    for row in rows:
        red.add(row if isinstance(row, dict) else to_sparse(F, row))
        if len(red) == ncols:
            break
    return tuple(red.rows()), red.pivot_columns()


def rank(F: FieldSpec, rows: Iterable, ncols: int) -> int:
    return len(rref_rows(F, rows, ncols)[0])


def left_kernel_rows(F: FieldSpec, rows: Sequence, ncols: int) -> tuple[tuple, ...]:
    """Canonical basis of {x : sum_i x_i rows[i] = 0}."""
    nrows = len(rows)
    red = RowReducer(F, ncols)
    rel = RowReducer(F, nrows)
    one = F.one
    for i, row in enumerate(rows):
        r = dict(row) if isinstance(row, dict) else to_sparse(F, row)
        r[ncols + i] = one
        rest = red.add(r)
        if rest is not None:
            rel.add({k - ncols: v for k, v in rest.items()})
    return tuple(rel.rows())


def solve_left(F: FieldSpec, rows: Sequence, target: Sequence, ncols: int):
    """Some x with x M = target, or None."""
    nrows = len(rows)
    red = RowReducer(F, ncols)
    one = F.one
    for i, row in enumerate(rows):
        r = dict(row) if isinstance(row, dict) else to_sparse(F, row)
        r[ncols + i] = one
        red.add(r)
    t = dict(target) if isinstance(target, dict) else to_sparse(F, target)
    r = red.reduce(t)
    if any(k < ncols for k in r):
        return None
    # t - sum_c t_c * pivotrow_c = r (only tag columns), so x = -r on tags
    return tuple(F.neg(r.get(ncols + i, F.zero)) for i in range(nrows))


def inverse_rows(F: FieldSpec, rows: Sequence) -> tuple[tuple, ...]:
    n = len(rows)
    red = RowReducer(F, n)
    for i, row in enumerate(rows):
        r = dict(row) if isinstance(row, dict) else to_sparse(F, row)
        r[n + i] = F.one
        if red.add(r) is not None:
            raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(F.zero if (n + j) not in red.pivots[i] else red.pivots[i][n + j] for j in range(n)) for i in range(n))


def mat_mul(F: FieldSpec, A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple[tuple, ...]:
    ncols = len(B[0]) if B else 0
    add, mul, zero = F.add, F.mul, F.zero
    out = []
    for row in A:
        acc = [zero] * ncols
        for k, a in enumerate(row):
            if a == zero:
                continue
            for j, b in enumerate(B[k]):
                if b != zero:
                    acc[j] = add(acc[j], mul(a, b))
        out.append(tuple(acc))
    return tuple(out)


def vec_mat(F: FieldSpec, v: Sequence, M: Sequence[Sequence]) -> tuple:
    return mat_mul(F, [v], M)[0] if M else ()


def transpose(rows: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(zip(*rows))


def identity(F: FieldSpec, n: int) -> tuple[tuple, ...]:
    return tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))


def zero_matrix(F: FieldSpec, r: int, c: int) -> tuple[tuple, ...]:
    return tuple((F.zero,) * c for _ in range(r))


def vec_add(F, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_sub(F, u, v):
    return tuple(F.sub(a, b) for a, b in zip(u, v))


def vec_scale(F, c, v):
    return tuple(F.mul(c, a) for a in v)


def is_zero_vec(F, v) -> bool:
    z = F.zero
    return all(a == z for a in v)


def unit_vector(F, n: int, i: int) -> tuple:
    return tuple(F.one if j == i else F.zero for j in range(n))


@dataclass(frozen=True)
class Mat:
    """A matrix of raw field values. Use ``Mat.from_scalars`` for Scalar grids."""

    field: FieldSpec
    rows: tuple[tuple, ...]
    ncols: int

    @classmethod
    def from_values(cls, F: FieldSpec, rows: Sequence[Sequence], ncols: int | None = None) -> "Mat":
        rows = tuple(tuple(F.parse(x) if not isinstance(x, Scalar) else x.value for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(F, rows, ncols)

    @classmethod
    def from_scalars(cls, grid: Sequence[Sequence[Scalar]]) -> "Mat":
        fields = {s.field for r in grid for s in r}
        if len(fields) > 1:
            raise FieldMismatchError("entries from different fields")
        if not fields:
            raise ValueError("cannot infer the field of an empty matrix")
        F = fields.pop()
        return cls.from_values(F, [[s.value for s in r] for r in grid])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.rows[i][j])

    def __matmul__(self, other: "Mat") -> "Mat":
        if other.field != self.field:
            raise FieldMismatchError("matrix fields differ")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return Mat(self.field, mat_mul(self.field, self.rows, other.rows), other.ncols)


def rref(m: Mat) -> Mat:
    rows, _ = rref_rows(m.field, m.rows, m.ncols)
    return Mat(m.field, rows, m.ncols)


def tensor_index(d: int, i: int, j: int) -> int:
    """Row-major flattening (i, j) -> i*d + j of {0..d-1}^2."""
    if not (0 <= i < d and 0 <= j < d):
        raise IndexError(f"({i}, {j}) out of range for d={d}")
    return i * d + j


def tensor_unindex(d: int, k: int) -> tuple[int, int]:
    if not 0 <= k < d * d:
        raise IndexError(f"{k} out of range for d={d}")
    return divmod(k, d)
