"""Structure-constant representations and their basic calculus.

Storage is sparse but the meaning is the dense tensors:

* ``mult[i][j]`` is a tuple of ``(k, c)`` with e_i e_j = sum c e_k;
* ``comult[i]`` is a tuple of ``(j, k, c)`` with Delta(e_i) = sum c e_j (x) e_k;
* ``antipode[i]`` is the dense row S(e_i).

Elements are dense tuples of raw field values; tensors in H (x) H are dicts
keyed by index pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..exactla import FieldSpec, Subspace, rank
from ..exactla.linalg import unit_vector
from ..util import memo


def _sorted_mult(F, d, mult) -> tuple:
    z = F.zero
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            entry = mult.get((i, j), {}) if isinstance(mult, Mapping) else mult[i][j]
            items = entry.items() if isinstance(entry, Mapping) else entry
            row.append(tuple(sorted((k, c) for k, c in items if c != z)))
        out.append(tuple(row))
    return tuple(out)


def _sorted_comult(F, d, comult) -> tuple:
    z = F.zero
    out = []
    for i in range(d):
        entry = comult.get(i, {}) if isinstance(comult, Mapping) else comult[i]
        if isinstance(entry, Mapping):
            items = [(j, k, c) for (j, k), c in entry.items()]
        else:
            items = list(entry)
        out.append(tuple(sorted((j, k, c) for j, k, c in items if c != z)))
    return tuple(out)


def _check_indices(d, mult=None, comult=None, vectors=()):
    if mult is not None:
        if len(mult) != d or any(len(r) != d for r in mult):
            raise ValueError("mult has the wrong shape")
        for r in mult:
            for e in r:
                for k, _ in e:
                    if not 0 <= k < d:
                        raise ValueError("mult index out of range")
    if comult is not None:
        if len(comult) != d:
            raise ValueError("comult has the wrong shape")
        for e in comult:
            for j, k, _ in e:
                if not (0 <= j < d and 0 <= k < d):
                    raise ValueError("comult index out of range")
    for v in vectors:
        if len(v) != d:
            raise ValueError("vector has the wrong length")


class _CoalgebraOps:
    field: FieldSpec
    dim: int
    comult: tuple
    counit: tuple

    def coproduct(self, v: Sequence) -> dict:
        F = self.field
        add, mul, z = F.add, F.mul, F.zero
        out: dict = {}
        for i, a in enumerate(v):
            if a == z:
                continue
            for j, k, c in self.comult[i]:
                key = (j, k)
                out[key] = add(out.get(key, z), mul(a, c))
        return {k: c for k, c in out.items() if c != z}

    def counit_value(self, v: Sequence):
        F = self.field
        return F.sum(F.mul(a, e) for a, e in zip(v, self.counit) if a != F.zero and e != F.zero)

    def delta_rows(self) -> list[dict]:
        """Delta as sparse rows over the flattened d^2 space (index j*d + k)."""
        d = self.dim
        return [{j * d + k: c for j, k, c in self.comult[i]} for i in range(self.dim)]

    def dual_mult(self) -> tuple:
        """Multiplication table of the dual algebra: e^j e^k = sum_i delta_i^{jk} e^i."""
        d = self.dim
        table: dict = {}
        for i in range(d):
            for j, k, c in self.comult[i]:
                table.setdefault((j, k), []).append((i, c))
        return tuple(tuple(tuple(sorted(table.get((j, k), ()))) for k in range(d)) for j in range(d))


class _AlgebraOps:
    field: FieldSpec
    dim: int
    mult: tuple
    unit: tuple

    def product(self, x: Sequence, y: Sequence) -> tuple:
        F = self.field
        add, mul, z = F.add, F.mul, F.zero
        out = [z] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b != z]
        for i, a in enumerate(x):
            if a == z:
                continue
            row = self.mult[i]
            for j, b in ys:
                ab = mul(a, b)
                for k, c in row[j]:
                    out[k] = add(out[k], mul(ab, c))
        return tuple(out)

    def basis_product(self, i: int, j: int) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for k, c in self.mult[i][j]:
            out[k] = c
        return tuple(out)

    def left_mult_rows(self, x: Sequence) -> tuple:
        """Matrix of y -> x y (row j is x e_j)."""
        return tuple(self.product(x, unit_vector(self.field, self.dim, j)) for j in range(self.dim))

    def right_mult_rows(self, x: Sequence) -> tuple:
        return tuple(self.product(unit_vector(self.field, self.dim, j), x) for j in range(self.dim))

    def tensor_product(self, s: Mapping, t: Mapping) -> dict:
        """Product in A (x) A of two sparse tensors."""
        F = self.field
        add, mul, z = F.add, F.mul, F.zero
        out: dict = {}
        mult = self.mult
        for (a, b), x in s.items():
            for (c, e), y in t.items():
                xy = mul(x, y)
                for p, u in mult[a][c]:
                    xyu = mul(xy, u)
                    for q, v in mult[b][e]:
                        key = (p, q)
                        out[key] = add(out.get(key, z), mul(xyu, v))
        return {k: v for k, v in out.items() if v != z}

    def dual_comult(self) -> tuple:
        """Comultiplication of the dual coalgebra: Delta(e^k) = sum m_{ij}^k e^i (x) e^j."""
        d = self.dim
        table: list[list] = [[] for _ in range(d)]
        for i in range(d):
            for j in range(d):
                for k, c in self.mult[i][j]:
                    table[k].append((i, j, c))
        return tuple(tuple(sorted(t)) for t in table)


@dataclass(frozen=True)
class Coalgebra(_CoalgebraOps):
    field: FieldSpec
    dim: int
    names: tuple[str, ...]
    comult: tuple
    counit: tuple

    def __post_init__(self):
        _check_indices(self.dim, comult=self.comult, vectors=[self.counit])
        if len(self.names) != self.dim:
            raise ValueError("names do not match dimension")

    @classmethod
    def build(cls, F, names, comult, counit) -> "Coalgebra":
        d = len(names)
        return cls(F, d, tuple(names), _sorted_comult(F, d, comult), tuple(counit))

    @property
    def coalgebra(self) -> "Coalgebra":
        return self


@dataclass(frozen=True)
class AlgebraData(_AlgebraOps):
    field: FieldSpec
    dim: int
    names: tuple[str, ...]
    mult: tuple
    unit: tuple

    def __post_init__(self):
        _check_indices(self.dim, mult=self.mult, vectors=[self.unit])
        if len(self.names) != self.dim:
            raise ValueError("names do not match dimension")

    @classmethod
    def build(cls, F, names, mult, unit) -> "AlgebraData":
        d = len(names)
        return cls(F, d, tuple(names), _sorted_mult(F, d, mult), tuple(unit))

    @property
    def algebra(self) -> "AlgebraData":
        return self


@dataclass(frozen=True)
class HopfAlgebra(_CoalgebraOps, _AlgebraOps):
    field: FieldSpec
    dim: int
    names: tuple[str, ...]
    mult: tuple
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: tuple

    def __post_init__(self):
        _check_indices(self.dim, mult=self.mult, comult=self.comult,
                       vectors=[self.unit, self.counit, *self.antipode])
        if len(self.antipode) != self.dim:
            raise ValueError("antipode has the wrong shape")
        if len(self.names) != self.dim:
            raise ValueError("names do not match dimension")

    @classmethod
    def build(cls, F, names, mult, unit, comult, counit, antipode) -> "HopfAlgebra":
        d = len(names)
        return cls(F, d, tuple(names), _sorted_mult(F, d, mult), tuple(unit),
                   _sorted_comult(F, d, comult), tuple(counit),
                   tuple(tuple(r) for r in antipode))

    @property
    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.field, self.dim, self.names, self.comult, self.counit)

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData(self.field, self.dim, self.names, self.mult, self.unit)

    def apply_antipode(self, v: Sequence) -> tuple:
        F = self.field
        add, mul, z = F.add, F.mul, F.zero
        out = [z] * self.dim
        for i, a in enumerate(v):
            if a == z:
                continue
            for j, s in enumerate(self.antipode[i]):
                if s != z:
                    out[j] = add(out[j], mul(a, s))
        return tuple(out)

    def basis(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def vec(self, terms: Mapping[str, object]) -> tuple:
        """Dense vector from a {basis name: scalar} mapping."""
        F = self.field
        v = [F.zero] * self.dim
        for name, c in terms.items():
            i = self.index(name)
            v[i] = F.add(v[i], F.parse(c))
        return tuple(v)


def _dual_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


@memo
def dual(s):
    """Linear dual. Hopf -> Hopf, Coalgebra -> AlgebraData, AlgebraData -> Coalgebra."""
    names = tuple(_dual_name(n) for n in s.names)
    F = s.field
    if isinstance(s, HopfAlgebra):
        anti = tuple(tuple(s.antipode[i][j] for i in range(s.dim)) for j in range(s.dim))
        return HopfAlgebra(F, s.dim, names, s.dual_mult(), s.counit, s.dual_comult(), s.unit, anti)
    if isinstance(s, Coalgebra):
        return AlgebraData(F, s.dim, names, s.dual_mult(), s.counit)
    if isinstance(s, AlgebraData):
        return Coalgebra(F, s.dim, names, s.dual_comult(), s.unit)
    raise TypeError(f"cannot dualize {type(s).__name__}")


def tensor_coords(U: Subspace, V: Subspace, t: Mapping) -> dict | None:
    """Coordinates of a tensor in U (x) V relative to the echelon bases, or None."""
    F = U.field
    z = F.zero
    coords = {}
    for r, p in enumerate(U.pivots):
        for s, q in enumerate(V.pivots):
            c = t.get((p, q), z)
            if c != z:
                coords[(r, s)] = c
    recon: dict = {}
    for (r, s), c in coords.items():
        for a, x in enumerate(U.basis[r]):
            if x == z:
                continue
            cx = F.mul(c, x)
            for b, y in enumerate(V.basis[s]):
                if y != z:
                    recon[(a, b)] = F.add(recon.get((a, b), z), F.mul(cx, y))
    recon = {k: v for k, v in recon.items() if v != z}
    if recon != {k: v for k, v in t.items() if v != z}:
        return None
    return coords


def in_tensor_product(U: Subspace, V: Subspace, t: Mapping) -> bool:
    """Whether t lies in U (x) V, tested by annihilators on each leg."""
    F = U.field
    z = F.zero
    if not t:
        return True
    Up, Vp = U.annihilator(), V.annihilator()
    # f . T = 0 for f in U-perp (contract first leg)
    for f in Up.basis:
        acc: dict = {}
        for (a, b), c in t.items():
            if f[a] != z:
                acc[b] = F.add(acc.get(b, z), F.mul(f[a], c))
        if any(v != z for v in acc.values()):
            return False
    for g in Vp.basis:
        acc = {}
        for (a, b), c in t.items():
            if g[b] != z:
                acc[a] = F.add(acc.get(a, z), F.mul(g[b], c))
        if any(v != z for v in acc.values()):
            return False
    return True


def restrict_hopf(h: HopfAlgebra, U: Subspace, names: Sequence[str] | None = None) -> HopfAlgebra:
    """The Hopf subalgebra on U, in the coordinates of U's echelon basis."""
    F = h.field
    n = U.dim
    mult = {}
    for r in range(n):
        for s in range(n):
            c = U.coordinates(h.product(U.basis[r], U.basis[s]))
            if c is None:
                raise ValueError("subspace is not closed under multiplication")
            mult[(r, s)] = {k: v for k, v in enumerate(c) if v != F.zero}
    comult = {}
    for r in range(n):
        c = tensor_coords(U, U, h.coproduct(U.basis[r]))
        if c is None:
            raise ValueError("subspace is not a subcoalgebra")
        comult[r] = c
    unit = U.coordinates(h.unit)
    if unit is None:
        raise ValueError("subspace does not contain the unit")
    counit = tuple(h.counit_value(b) for b in U.basis)
    anti = []
    for b in U.basis:
        c = U.coordinates(h.apply_antipode(b))
        if c is None:
            raise ValueError("subspace is not stable under the antipode")
        anti.append(c)
    if names is None:
        names = [_vector_name(h, b) for b in U.basis]
    return HopfAlgebra.build(F, names, mult, unit, comult, counit, anti)


def _vector_name(h, v) -> str:
    F = h.field
    nz = [i for i, a in enumerate(v) if a != F.zero]
    if len(nz) == 1 and v[nz[0]] == F.one:
        return h.names[nz[0]]
    parts = []
    for i in nz:
        a = v[i]
        coef = "" if a == F.one else f"{F.to_text(a)}*"
        parts.append(f"{coef}{h.names[i]}")
    return "+".join(parts)


def antipode_rank(h: HopfAlgebra) -> int:
    return rank(h.field, h.antipode, h.dim)
