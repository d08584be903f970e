"""Jacobson radical of a finite-dimensional algebra.

Characteristic 0: kernel of the trace form (x, y) -> Tr(L_{xy}).
Characteristic p: the iterated p-power trace criterion; for p > dim only
the first step runs, which is the ordinary trace form.
"""

from __future__ import annotations

from ..exactla import Subspace, left_kernel_rows, quotient_basis
from ..exactla.fields import PrimeField
from ..exactla.linalg import mat_mul, unit_vector
from .core import AlgebraData


class UnsupportedFieldError(ValueError):
    pass


def _traces(a) -> list:
    F = a.field
    out = []
    for k in range(a.dim):
        t = F.zero
        for l in range(a.dim):
            for kk, c in a.mult[k][l]:
                if kk == l:
                    t = F.add(t, c)
        out.append(t)
    return out


def _radical_char0(a) -> Subspace:
    F, d = a.field, a.dim
    t = _traces(a)
    gram = []
    for i in range(d):
        row = []
        for j in range(d):
            s = F.zero
            for k, c in a.mult[i][j]:
                if t[k] != F.zero:
                    s = F.add(s, F.mul(c, t[k]))
            row.append(s)
        gram.append(row)
    return Subspace.span(F, d, left_kernel_rows(F, gram, d))


def _int_matpow_trace(L: list[list[int]], e: int, mod: int) -> int:
    n = len(L)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = [row[:] for row in L]

    def mm(A, B):
        Bt = list(zip(*B))
        return [[sum(x * y for x, y in zip(r, c)) % mod for c in Bt] for r in A]

    while e:
        if e & 1:
            result = mm(result, base)
        base = mm(base, base)
        e >>= 1
    return sum(result[i][i] for i in range(n)) % mod


def _radical_charp(a) -> Subspace:
    F, d = a.field, a.dim
    p = F.p
    ell = 0
    while p ** (ell + 1) <= d:
        ell += 1
    current = [unit_vector(F, d, i) for i in range(d)]
    for i in range(ell + 1):
        pi = p**i
        mod = p ** (i + 1)
        rows = []
        for u in current:
            row = []
            for b in range(d):
                ab = a.product(u, unit_vector(F, d, b))
                L = [list(r) for r in a.left_mult_rows(ab)]
                # left_mult_rows gives rows = images; trace is basis-independent
                tr = _int_matpow_trace(L, pi, mod)
                if tr % pi:
                    raise ArithmeticError("p-power trace not divisible; input is not an algebra")
                row.append((tr // pi) % p)
            rows.append(row)
        ker = left_kernel_rows(F, rows, d)
        current = list(Subspace.span(F, d, mat_mul(F, ker, current) if ker else []).basis)
        if not current:
            break
    return Subspace.span(F, d, current)


def jacobson_radical(a) -> Subspace:
    F = a.field
    if F.characteristic == 0:
        return _radical_char0(a)
    if isinstance(F, PrimeField):
        return _radical_charp(a)
    raise UnsupportedFieldError(f"no radical algorithm for {F!r}")


def subspace_product_alg(a, U: Subspace, V: Subspace) -> Subspace:
    """span{u v} in an algebra given by structure constants."""
    from ..exactla import RowReducer
    from ..exactla.linalg import to_sparse

    F, d = a.field, a.dim
    red = RowReducer(F, d)
    for u in U.basis:
        for v in V.basis:
            red.add(to_sparse(F, a.product(u, v)))
            if len(red) == d:
                return Subspace.full(F, d)
    return Subspace.span(F, d, red.rows())


def quotient_algebra(a, I: Subspace) -> AlgebraData:
    """A/I for a two-sided ideal I, on the echelon complement."""
    F, d = a.field, a.dim
    lift, proj = quotient_basis(Subspace.full(F, d), I)
    q = lift.nrows
    mult = {}
    for r in range(q):
        for s in range(q):
            prod = a.product(lift.rows[r], lift.rows[s])
            img = mat_mul(F, [prod], proj.rows)[0]
            mult[(r, s)] = {k: v for k, v in enumerate(img) if v != F.zero}
    unit = mat_mul(F, [a.unit], proj.rows)[0] if q else ()
    return AlgebraData.build(F, [f"q{r}" for r in range(q)], mult, unit)


def radical_violations(a, J: Subspace) -> list[str]:
    """Certifies J = rad(a): ideal, nilpotent, semisimple quotient."""
    F, d = a.field, a.dim
    out = []
    full = Subspace.full(F, d)
    if not J.contains_subspace(subspace_product_alg(a, full, J)):
        out.append("radical is not a left ideal")
    if not J.contains_subspace(subspace_product_alg(a, J, full)):
        out.append("radical is not a right ideal")
    power = J
    for _ in range(d + 1):
        if power.dim == 0:
            break
        power = subspace_product_alg(a, power, J)
    if power.dim:
        out.append("radical is not nilpotent")
    if J.dim < d:
        quo = quotient_algebra(a, J)
        if jacobson_radical(quo).dim:
            out.append("quotient by the radical is not semisimple")
    return out
