"""Exact axiom checks for coalgebras, algebras and Hopf algebras."""

from __future__ import annotations

from typing import Sequence

from ..exactla import RowReducer, rank
from ..exactla.linalg import to_sparse, unit_vector
from .core import AlgebraData, Coalgebra, HopfAlgebra


def _tensor3_left(c) -> list[dict]:
    # (Delta (x) id) Delta (e_i)
    out = []
    F = c.field
    for i in range(c.dim):
        acc: dict = {}
        for j, k, a in c.comult[i]:
            for p, q, b in c.comult[j]:
                key = (p, q, k)
                acc[key] = F.add(acc.get(key, F.zero), F.mul(a, b))
        out.append({k: v for k, v in acc.items() if v != F.zero})
    return out


def _tensor3_right(c) -> list[dict]:
    out = []
    F = c.field
    for i in range(c.dim):
        acc: dict = {}
        for j, k, a in c.comult[i]:
            for p, q, b in c.comult[k]:
                key = (j, p, q)
                acc[key] = F.add(acc.get(key, F.zero), F.mul(a, b))
        out.append({k: v for k, v in acc.items() if v != F.zero})
    return out


def coalgebra_violations(c) -> list[str]:
    F, d = c.field, c.dim
    out = []
    left, right = _tensor3_left(c), _tensor3_right(c)
    for i in range(d):
        if left[i] != right[i]:
            out.append(f"coassociativity fails on {c.names[i]}")
    for i in range(d):
        e = unit_vector(F, d, i)
        l = [F.zero] * d
        r = [F.zero] * d
        for j, k, a in c.comult[i]:
            l[k] = F.add(l[k], F.mul(c.counit[j], a))
            r[j] = F.add(r[j], F.mul(c.counit[k], a))
        if tuple(l) != e:
            out.append(f"left counit law fails on {c.names[i]}")
        if tuple(r) != e:
            out.append(f"right counit law fails on {c.names[i]}")
    return out


def algebra_violations(a) -> list[str]:
    F, d = a.field, a.dim
    out = []
    for i in range(d):
        ei = unit_vector(F, d, i)
        for j in range(d):
            ij = a.basis_product(i, j)
            for k in range(d):
                lhs = a.product(ij, unit_vector(F, d, k))
                rhs = a.product(ei, a.basis_product(j, k))
                if lhs != rhs:
                    out.append(f"associativity fails on ({a.names[i]}, {a.names[j]}, {a.names[k]})")
                    break
    for i in range(d):
        e = unit_vector(F, d, i)
        if a.product(a.unit, e) != e:
            out.append(f"left unit law fails on {a.names[i]}")
        if a.product(e, a.unit) != e:
            out.append(f"right unit law fails on {a.names[i]}")
    return out


def generating_set(a) -> list[int]:
    """Greedy list of basis indices whose left-nested words span the algebra."""
    F, d = a.field, a.dim
    gens: list[int] = []

    def closure():
        red = RowReducer(F, d)
        red.add(to_sparse(F, a.unit))
        todo = [a.unit]
        vecs = [a.unit]
        while todo:
            v = todo.pop()
            for g in gens:
                w = a.product(unit_vector(F, d, g), v)
                if red.add(to_sparse(F, w)) is None:
                    todo.append(w)
                    vecs.append(w)
        return red

    red = closure()
    for i in range(d):
        if len(red) == d:
            break
        if not red.contains(to_sparse(F, unit_vector(F, d, i))):
            gens.append(i)
            red = closure()
    return gens


def hopf_violations(h: HopfAlgebra) -> list[str]:
    F, d = h.field, h.dim
    out = coalgebra_violations(h) + algebra_violations(h)
    one = h.unit
    unit_t = {(i, j): F.mul(a, b) for i, a in enumerate(one) for j, b in enumerate(one)
              if a != F.zero and b != F.zero}
    if h.coproduct(one) != unit_t:
        out.append("Delta(1) != 1 (x) 1")
    if h.counit_value(one) != F.one:
        out.append("epsilon(1) != 1")
    for i in range(d):
        for j in range(d):
            if h.counit_value(h.basis_product(i, j)) != F.mul(h.counit[i], h.counit[j]):
                out.append(f"counit not multiplicative on ({h.names[i]}, {h.names[j]})")
    # multiplicativity of Delta on generator x basis pairs suffices once the
    # algebra axioms hold: Delta(g1...gk y) unfolds one generator at a time
    for g in generating_set(h):
        dg = h.coproduct(unit_vector(F, d, g))
        for j in range(d):
            lhs = h.coproduct(h.basis_product(g, j))
            rhs = h.tensor_product(dg, h.coproduct(unit_vector(F, d, j)))
            if lhs != rhs:
                out.append(f"Delta not multiplicative on ({h.names[g]}, {h.names[j]})")
    for i in range(d):
        target = tuple(F.mul(h.counit[i], u) for u in one)
        left = [F.zero] * d
        right = [F.zero] * d
        for j, k, c in h.comult[i]:
            sj = h.antipode[j]
            lk = h.product(sj, unit_vector(F, d, k))
            rk = h.product(unit_vector(F, d, j), h.antipode[k])
            for t in range(d):
                if lk[t] != F.zero:
                    left[t] = F.add(left[t], F.mul(c, lk[t]))
                if rk[t] != F.zero:
                    right[t] = F.add(right[t], F.mul(c, rk[t]))
        if tuple(left) != target:
            out.append(f"antipode axiom m(S (x) id)Delta fails on {h.names[i]}")
        if tuple(right) != target:
            out.append(f"antipode axiom m(id (x) S)Delta fails on {h.names[i]}")
    if rank(F, h.antipode, d) != d:
        out.append("antipode is not bijective")
    return out


def validate(structure) -> list[str]:
    """All violated axioms; an empty list means the structure is valid."""
    if isinstance(structure, HopfAlgebra):
        return hopf_violations(structure)
    if isinstance(structure, Coalgebra):
        return coalgebra_violations(structure)
    if isinstance(structure, AlgebraData):
        return algebra_violations(structure)
    raise TypeError(f"cannot validate {type(structure).__name__}")


def anti_coalgebra_violations(c: Coalgebra, S: Sequence[Sequence]) -> list[str]:
    """Checks Delta S = (S (x) S) tau Delta and epsilon S = epsilon."""
    F, d = c.field, c.dim
    out = []
    for i in range(d):
        lhs = c.coproduct(S[i])
        rhs: dict = {}
        for j, k, a in c.comult[i]:
            for p, x in enumerate(S[k]):
                if x == F.zero:
                    continue
                ax = F.mul(a, x)
                for q, y in enumerate(S[j]):
                    if y != F.zero:
                        rhs[(p, q)] = F.add(rhs.get((p, q), F.zero), F.mul(ax, y))
        rhs = {k: v for k, v in rhs.items() if v != F.zero}
        if lhs != rhs:
            out.append(f"S is not anti-comultiplicative on {c.names[i]}")
        if c.counit_value(S[i]) != c.counit[i]:
            out.append(f"S does not preserve the counit on {c.names[i]}")
    return out


def hopf_map_violations(f: Sequence[Sequence], A: HopfAlgebra, B: HopfAlgebra) -> list[str]:
    """Checks that the dim A x dim B matrix f is a Hopf algebra map A -> B."""
    from ..exactla import mat_mul

    F = A.field
    out = []
    fu = mat_mul(F, [A.unit], f)[0]
    if fu != B.unit:
        out.append("map does not preserve the unit")
    for i in range(A.dim):
        if B.counit_value(f[i]) != A.counit[i]:
            out.append(f"map does not preserve the counit on {A.names[i]}")
            break
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = mat_mul(F, [A.basis_product(i, j)], f)[0]
            rhs = B.product(f[i], f[j])
            if lhs != rhs:
                out.append(f"map is not multiplicative on ({A.names[i]}, {A.names[j]})")
                break
    for i in range(A.dim):
        img = B.coproduct(f[i])
        push: dict = {}
        for j, k, c in A.comult[i]:
            for p, x in enumerate(f[j]):
                if x == F.zero:
                    continue
                cx = F.mul(c, x)
                for q, y in enumerate(f[k]):
                    if y != F.zero:
                        push[(p, q)] = F.add(push.get((p, q), F.zero), F.mul(cx, y))
        push = {k: v for k, v in push.items() if v != F.zero}
        if img != push:
            out.append(f"map is not comultiplicative on {A.names[i]}")
    for i in range(A.dim):
        lhs = mat_mul(F, [A.antipode[i]], f)[0]
        rhs = B.apply_antipode(f[i])
        if lhs != rhs:
            out.append(f"map does not commute with the antipode on {A.names[i]}")
    return out
