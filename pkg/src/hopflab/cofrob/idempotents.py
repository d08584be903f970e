"""Complete sets of primitive orthogonal idempotents in a split algebra.

An idempotent e is primitive exactly when eAe / eJe is one-dimensional
(split case). Otherwise some a in eAe has a minimal polynomial with a root
lambda and a second coprime factor; the primary idempotent for lambda is a
polynomial in a, splitting e into two orthogonal pieces.
"""

from __future__ import annotations

import random

from ..exactla import RowReducer, Subspace
from ..exactla import poly
from ..exactla.linalg import to_sparse, vec_sub


class DecompositionError(RuntimeError):
    pass


def minimal_polynomial(A, e, a) -> tuple[list, list]:
    """Monic minimal polynomial of a in the corner algebra with unit e,
    together with the list of powers a^0 = e, a, a^2, ..."""
    F, d = A.field, A.dim
    red = RowReducer(F, d)
    powers = []
    cur = e
    k = 0
    while True:
        row = to_sparse(F, cur)
        row[d + k] = F.one
        rest = red.add(row)
        powers.append(cur)
        if rest is not None:
            m = [rest.get(d + i, F.zero) for i in range(k + 1)]
            return poly.trim(F, m), powers
        cur = A.product(cur, a)
        k += 1


def _poly_at(A, powers, f):
    F, d = A.field, A.dim
    out = [F.zero] * d
    for c, p in zip(f, powers):
        if c == F.zero:
            continue
        for i, x in enumerate(p):
            if x != F.zero:
                out[i] = F.add(out[i], F.mul(c, x))
    return tuple(out)


def _powers_upto(A, e, a, n):
    powers = [e]
    for _ in range(n):
        powers.append(A.product(powers[-1], a))
    return powers


def split_by(A, e, a):
    """A nontrivial idempotent f = f(a) of the corner eAe, or None."""
    F = A.field
    m, powers = minimal_polynomial(A, e, a)
    if len(m) <= 2:
        return None
    for lam in poly.roots(F, m):
        lin = [F.neg(lam), F.one]
        q, s = m, 0
        while True:
            quo, rem = poly.divmod_(F, q, lin)
            if rem:
                break
            q, s = quo, s + 1
        if len(q) <= 1:
            continue
        p = poly.power_of_linear(F, lam, s)
        g, u, v = poly.ext_gcd(F, p, q)
        if len(g) != 1:
            continue
        fpoly = poly.scale(F, poly.mul(F, v, q), F.inv(g[0]))
        fpoly = poly.divmod_(F, fpoly, m)[1]
        pw = powers if len(fpoly) <= len(powers) else _powers_upto(A, e, a, len(fpoly))
        return _poly_at(A, pw, fpoly)
    return None


def _corner(A, e) -> Subspace:
    F, d = A.field, A.dim
    red = RowReducer(F, d)
    for i in range(d):
        x = tuple(F.one if j == i else F.zero for j in range(d))
        red.add(to_sparse(F, A.product(A.product(e, x), e)))
    return Subspace.span(F, d, red.rows())


def _candidates(A, corner: Subspace, seed: int = 0):
    F = A.field
    B = corner.basis
    yield from B
    for i in range(len(B)):
        for j in range(i + 1, len(B)):
            yield tuple(F.add(x, y) for x, y in zip(B[i], B[j]))
    rng = random.Random(seed)
    for _ in range(200):
        coeffs = [F.from_int(rng.randint(-3, 3)) for _ in B]
        v = [F.zero] * A.dim
        for c, b in zip(coeffs, B):
            if c != F.zero:
                for t, x in enumerate(b):
                    if x != F.zero:
                        v[t] = F.add(v[t], F.mul(c, x))
        yield tuple(v)


def is_primitive(A, J: Subspace, e) -> bool:
    corner = _corner(A, e)
    cj = Subspace.span(A.field, A.dim, [A.product(A.product(e, j), e) for j in J.basis])
    return corner.dim - cj.dim == 1


def primitive_idempotents(A, J: Subspace, unit=None) -> list[tuple]:
    """Primitive orthogonal idempotents summing to ``unit`` (default: 1)."""
    F = A.field
    stack = [tuple(A.unit if unit is None else unit)]
    out = []
    while stack:
        e = stack.pop()
        corner = _corner(A, e)
        cj = Subspace.span(F, A.dim, [A.product(A.product(e, j), e) for j in J.basis])
        if corner.dim - cj.dim == 1:
            out.append(e)
            continue
        if corner.dim - cj.dim < 1:
            raise DecompositionError("corner algebra collapsed")
        f = None
        for a in _candidates(A, corner):
            f = split_by(A, e, a)
            if f is not None:
                break
        if f is None:
            raise DecompositionError("no splitting element found (the algebra may not be split)")
        if A.product(f, f) != f:
            raise DecompositionError("computed idempotent is not idempotent")
        stack.append(vec_sub(F, e, f))
        stack.append(f)
    return out


def check_idempotents(A, idems) -> list[str]:
    F, d = A.field, A.dim
    out = []
    total = [F.zero] * d
    for e in idems:
        total = [F.add(x, y) for x, y in zip(total, e)]
    if tuple(total) != tuple(A.unit):
        out.append("idempotents do not sum to 1")
    zero = (F.zero,) * d
    for i, e in enumerate(idems):
        if A.product(e, e) != tuple(e):
            out.append(f"element {i} is not idempotent")
        for j, f in enumerate(idems):
            if i != j and A.product(e, f) != zero:
                out.append(f"elements {i} and {j} are not orthogonal")
    return out


__all__ = ["DecompositionError", "primitive_idempotents", "is_primitive", "check_idempotents",
           "minimal_polynomial", "split_by"]
