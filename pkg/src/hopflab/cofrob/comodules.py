"""Finite-dimensional comodules, treated as modules over the dual algebra.

A comodule M over H is stored by its coaction: ``coaction[i]`` lists
triples (l, j, c) meaning c h_l (x) m_j (left side) or c m_j (x) h_l (right
side) occurs in the coaction of m_i. For each basis index l of H the
operator matrix A_l has A_l[i][j] = c; a functional f acts on row vectors by
m -> m (sum_l f_l A_l). Left comodules become right modules over H*, right
comodules right modules over (H*)^op.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exactla import RowReducer, Subspace
from ..exactla.linalg import (
    identity,
    inverse_rows,
    left_kernel_rows,
    mat_mul,
    to_sparse,
    unit_vector,
)
from ..exactla.subspace import quotient_basis
from ..structures.axioms import generating_set
from ..structures.core import AlgebraData
from ..structures.filtrations import _dual_alg_cached, _dual_radical, coradical
from ..structures.radical import jacobson_radical
from ..util import memo
from .idempotents import DecompositionError, primitive_idempotents


class ComoduleError(ValueError):
    pass


@dataclass(frozen=True)
class Comodule:
    H: object
    dim: int
    coaction: tuple
    side: str = "left"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")

    @property
    def field(self):
        return self.H.field

    def coact(self, v: Sequence) -> dict:
        """Coaction of a vector as {(l, j): c}."""
        F = self.field
        out: dict = {}
        for i, a in enumerate(v):
            if a == F.zero:
                continue
            for l, j, c in self.coaction[i]:
                out[(l, j)] = F.add(out.get((l, j), F.zero), F.mul(a, c))
        return {k: x for k, x in out.items() if x != F.zero}


def comodule_violations(M: Comodule) -> list[str]:
    F, H = M.field, M.H
    out = []
    for i in range(M.dim):
        lhs: dict = {}
        rhs: dict = {}
        for l, j, c in M.coaction[i]:
            for a, b, x in H.comult[l]:
                key = (a, b, j)
                lhs[key] = F.add(lhs.get(key, F.zero), F.mul(c, x))
            for l2, j2, x in M.coaction[j]:
                key = (l, l2, j2) if M.side == "left" else (l2, l, j2)
                rhs[key] = F.add(rhs.get(key, F.zero), F.mul(c, x))
        lhs = {k: x for k, x in lhs.items() if x != F.zero}
        rhs = {k: x for k, x in rhs.items() if x != F.zero}
        if lhs != rhs:
            out.append(f"coaction is not coassociative on basis vector {i}")
        back = [F.zero] * M.dim
        for l, j, c in M.coaction[i]:
            if H.counit[l] != F.zero:
                back[j] = F.add(back[j], F.mul(c, H.counit[l]))
        if tuple(back) != unit_vector(F, M.dim, i):
            out.append(f"counit law fails on basis vector {i}")
    return out


def _clean(F, triples: dict) -> tuple:
    return tuple(sorted((l, j, c) for (l, j), c in triples.items() if c != F.zero))


def regular(h, side: str = "left") -> Comodule:
    """H as a comodule over itself via the coproduct."""
    rows = []
    for i in range(h.dim):
        if side == "left":
            rows.append(tuple(sorted((j, k, c) for j, k, c in h.comult[i])))
        else:
            rows.append(tuple(sorted((k, j, c) for j, k, c in h.comult[i])))
    return Comodule(h, h.dim, tuple(rows), side)


def trivial(h, side: str = "left", n: int = 1) -> Comodule:
    F = h.field
    rows = tuple(tuple((l, i, u) for l, u in enumerate(h.unit) if u != F.zero) for i in range(n))
    return Comodule(h, n, rows, side)


def pushforward(M: Comodule, pi: Sequence[Sequence], C) -> Comodule:
    """Corestriction along a coalgebra map pi: H -> C (dim H x dim C matrix)."""
    F = M.field
    rows = []
    for i in range(M.dim):
        acc: dict = {}
        for l, j, c in M.coaction[i]:
            for l2, x in enumerate(pi[l]):
                if x != F.zero:
                    acc[(l2, j)] = F.add(acc.get((l2, j), F.zero), F.mul(c, x))
        rows.append(_clean(F, acc))
    return Comodule(C, M.dim, tuple(rows), M.side)


@memo
def operators(M: Comodule) -> tuple:
    """Dense matrices A_l, one per basis index of H."""
    F, n = M.field, M.dim
    mats = [[[F.zero] * n for _ in range(n)] for _ in range(M.H.dim)]
    for i in range(n):
        for l, j, c in M.coaction[i]:
            mats[l][i][j] = F.add(mats[l][i][j], c)
    return tuple(tuple(tuple(r) for r in m) for m in mats)


def operator_of(M: Comodule, f: Sequence) -> tuple:
    F, n = M.field, M.dim
    ops = operators(M)
    out = [[F.zero] * n for _ in range(n)]
    for l, a in enumerate(f):
        if a == F.zero:
            continue
        for i, row in enumerate(ops[l]):
            for j, x in enumerate(row):
                if x != F.zero:
                    out[i][j] = F.add(out[i][j], F.mul(a, x))
    return tuple(tuple(r) for r in out)


def action_algebra(M: Comodule) -> AlgebraData:
    A = _dual_alg_cached(M.H)
    if M.side == "left":
        return A
    return _opposite(A)


@memo
def _opposite(A: AlgebraData) -> AlgebraData:
    d = A.dim
    mult = tuple(tuple(A.mult[j][i] for j in range(d)) for i in range(d))
    return AlgebraData(A.field, d, tuple(n + "^op" for n in A.names), mult, A.unit)


@memo
def _action_generators(H, side: str) -> tuple[int, ...]:
    A = _dual_alg_cached(H)
    return tuple(generating_set(A if side == "left" else _opposite(A)))


def restrict(M: Comodule, U: Subspace) -> Comodule:
    """The subcomodule U, in the coordinates of U's canonical basis."""
    F = M.field
    if not is_subcomodule(M, U):
        raise ComoduleError("subspace is not a subcomodule")
    rows = []
    for u in U.basis:
        by_l: dict = {}
        for (l, j), c in M.coact(u).items():
            by_l.setdefault(l, [F.zero] * M.dim)[j] = c
        acc: dict = {}
        for l, vec in by_l.items():
            coords = U.coordinates(vec)
            for a, c in enumerate(coords):
                if c != F.zero:
                    acc[(l, a)] = c
        rows.append(_clean(F, acc))
    return Comodule(M.H, U.dim, tuple(rows), M.side)


def quotient(M: Comodule, U: Subspace) -> tuple[Comodule, tuple, tuple]:
    """M/U with the lift and projection matrices."""
    F = M.field
    if not is_subcomodule(M, U):
        raise ComoduleError("subspace is not a subcomodule")
    lift, proj = quotient_basis(Subspace.full(F, M.dim), U)
    rows = []
    for v in lift.rows:
        acc: dict = {}
        for (l, j), c in M.coact(v).items():
            for a, x in enumerate(proj.rows[j]):
                if x != F.zero:
                    acc[(l, a)] = F.add(acc.get((l, a), F.zero), F.mul(c, x))
        rows.append(_clean(F, acc))
    return Comodule(M.H, len(lift.rows), tuple(rows), M.side), lift.rows, proj.rows


def is_subcomodule(M: Comodule, U: Subspace) -> bool:
    ops = operators(M)
    for u in U.basis:
        for A in ops:
            if not U.contains(mat_mul(M.field, [u], A)[0]):
                return False
    return True


def generated(M: Comodule, vectors) -> Subspace:
    """Smallest subcomodule containing the given vectors."""
    F, n = M.field, M.dim
    ops = operators(M)
    red = RowReducer(F, n)
    todo = []
    for v in vectors:
        if red.add(to_sparse(F, v)) is None:
            todo.append(tuple(v))
    while todo:
        v = todo.pop()
        for A in ops:
            w = mat_mul(F, [v], A)[0]
            if red.add(to_sparse(F, w)) is None:
                todo.append(w)
    return Subspace.span(F, n, red.rows())


def radical_ideal(M: Comodule) -> Subspace:
    """J of the action algebra, as a subspace of H* coordinates."""
    return _dual_radical(M.H)


def socle(M: Comodule) -> Subspace:
    """{m : m J = 0}, the sum of all simple subcomodules."""
    F, n = M.field, M.dim
    J = radical_ideal(M)
    if J.dim == 0:
        return Subspace.full(F, n)
    mats = [operator_of(M, f) for f in J.basis]
    rows = [tuple(x for A in mats for x in A[i]) for i in range(n)]
    return Subspace.span(F, n, left_kernel_rows(F, rows, n * len(mats)))


def radical(M: Comodule) -> Subspace:
    """M J: the intersection of the maximal subcomodules."""
    F, n = M.field, M.dim
    J = radical_ideal(M)
    red = RowReducer(F, n)
    for f in J.basis:
        A = operator_of(M, f)
        for row in A:
            red.add(to_sparse(F, row))
    return Subspace.span(F, n, red.rows())


def hom_space(M: Comodule, N: Comodule) -> list[tuple]:
    """Basis of comodule maps M -> N as dim M x dim N matrices (m -> m X)."""
    if M.H is not N.H and M.H != N.H:
        raise ComoduleError("comodules over different coalgebras")
    if M.side != N.side:
        raise ComoduleError("comodules on different sides")
    F, m, n = M.field, M.dim, N.dim
    gens = _action_generators(M.H, M.side)
    AM, AN = operators(M), operators(N)
    rows = [dict() for _ in range(m * n)]
    for gi, l in enumerate(gens):
        A, B = AM[l], AN[l]
        base = gi * m * n
        for i in range(m):
            for j in range(m):
                a = A[i][j]
                if a == F.zero:
                    continue
                for q in range(n):
                    r = rows[j * n + q]
                    col = base + i * n + q
                    r[col] = F.add(r.get(col, F.zero), a)
            for p in range(n):
                r = rows[i * n + p]
                for q in range(n):
                    b = B[p][q]
                    if b != F.zero:
                        col = base + i * n + q
                        r[col] = F.sub(r.get(col, F.zero), b)
    rows = [{k: v for k, v in r.items() if v != F.zero} for r in rows]
    sol = left_kernel_rows(F, rows, len(gens) * m * n)
    return [tuple(tuple(s[i * n:(i + 1) * n]) for i in range(m)) for s in sol]


@dataclass(frozen=True)
class EndAlgebra:
    algebra: AlgebraData
    matrices: tuple
    radical: Subspace


def _flatten(X) -> tuple:
    return tuple(x for row in X for x in row)


@memo
def endomorphism_algebra(M: Comodule) -> EndAlgebra:
    """End(M) with product x*y acting as "first x, then y" on row vectors."""
    F = M.field
    if _is_regular(M):
        return _regular_end(M)
    mats = hom_space(M, M)
    flat = [_flatten(X) for X in mats]
    W = Subspace.span(F, M.dim * M.dim, flat)
    mats = [tuple(tuple(b[i * M.dim:(i + 1) * M.dim]) for i in range(M.dim)) for b in W.basis]
    r = len(mats)
    mult = []
    for a in range(r):
        row = []
        for b in range(r):
            coords = W.coordinates(_flatten(mat_mul(F, mats[a], mats[b])))
            row.append(tuple((k, c) for k, c in enumerate(coords) if c != F.zero))
        mult.append(tuple(row))
    unit = W.coordinates(_flatten(identity(F, M.dim)))
    A = AlgebraData(F, r, tuple(f"e{k}" for k in range(r)), tuple(mult), tuple(unit))
    return EndAlgebra(A, tuple(mats), jacobson_radical(A))


def _is_regular(M: Comodule) -> bool:
    return M.dim == M.H.dim and M.coaction == regular(M.H, M.side).coaction


def _regular_end(M: Comodule) -> EndAlgebra:
    # left: f -> (h -> h_(1) f(h_(2))), an anti-isomorphism from H*;
    # right: f -> (h -> f(h_(1)) h_(2)), an isomorphism from H*.
    F, H, d = M.field, M.H, M.dim
    A = _dual_alg_cached(H)
    mats = []
    for a in range(d):
        X = [[F.zero] * d for _ in range(d)]
        for i in range(d):
            for j, k, c in H.comult[i]:
                if M.side == "left" and k == a:
                    X[i][j] = F.add(X[i][j], c)
                elif M.side == "right" and j == a:
                    X[i][k] = F.add(X[i][k], c)
        mats.append(tuple(tuple(r) for r in X))
    alg = _opposite(A) if M.side == "left" else A
    return EndAlgebra(alg, tuple(mats), _dual_radical(H))


def _image(F, n, X) -> Subspace:
    return Subspace.span(F, n, X)


def indecomposable_decomposition(M: Comodule) -> list[Subspace]:
    """Summands cut out by a complete set of primitive orthogonal idempotents
    of End(M); each summand has a local endomorphism ring."""
    F = M.field
    E = endomorphism_algebra(M)
    idems = primitive_idempotents(E.algebra, E.radical)
    parts = []
    for e in idems:
        X = [[F.zero] * M.dim for _ in range(M.dim)]
        for k, c in enumerate(e):
            if c != F.zero:
                for i, row in enumerate(E.matrices[k]):
                    for j, x in enumerate(row):
                        if x != F.zero:
                            X[i][j] = F.add(X[i][j], F.mul(c, x))
        parts.append(_image(F, M.dim, X))
    total = Subspace.span(F, M.dim, [v for P in parts for v in P.basis])
    if total.dim != M.dim or sum(P.dim for P in parts) != M.dim:
        raise DecompositionError("summands do not form a direct sum decomposition")
    parts.sort(key=lambda P: (P.dim, P.pivots, tuple(map(str, P.basis))))
    return parts


def is_local(M: Comodule) -> bool:
    """End(M)/rad is one-dimensional (a division algebra in the split case)."""
    E = endomorphism_algebra(M)
    return E.algebra.dim - E.radical.dim == 1


def is_simple(M: Comodule) -> bool:
    """Semisimple with scalar endomorphisms, so no proper nonzero subcomodules."""
    if M.dim == 0:
        return False
    return socle(M).is_full() and len(hom_space(M, M)) == 1


def simple_decomposition(M: Comodule, S: Subspace | None = None) -> list[Subspace]:
    """Simple subcomodules whose direct sum is the socle (or the given
    semisimple subcomodule S)."""
    F = M.field
    S = socle(M) if S is None else S
    sub = restrict(M, S)
    if not socle(sub).is_full():
        raise ComoduleError("subcomodule is not semisimple")
    out = []
    for P in indecomposable_decomposition(sub):
        V = Subspace.span(F, M.dim, mat_mul(F, P.basis, S.basis)) if P.basis else Subspace.zero(F, M.dim)
        if not is_simple(restrict(sub, P)):
            raise ComoduleError("summand of the socle is not simple")
        out.append(V)
    return out


def isomorphic(M: Comodule, N: Comodule) -> bool:
    """For simple comodules: a nonzero map exists."""
    return M.dim == N.dim and len(hom_space(M, N)) > 0


def socle_matches_coradical(h) -> bool:
    return socle(regular(h, "left")) == coradical(h) == socle(regular(h, "right"))


def block_projections(F, n: int, parts: Sequence[Subspace]):
    """Coordinates of vectors relative to a direct sum decomposition."""
    basis = [v for P in parts for v in P.basis]
    inv = inverse_rows(F, basis)
    offsets = []
    o = 0
    for P in parts:
        offsets.append((o, o + P.dim))
        o += P.dim

    def split(v):
        coords = mat_mul(F, [v], inv)[0]
        return [coords[a:b] for a, b in offsets]

    return split


__all__ = [
    "Comodule", "ComoduleError", "comodule_violations", "regular", "trivial", "pushforward",
    "operators", "operator_of", "action_algebra", "restrict", "quotient", "is_subcomodule",
    "generated", "socle", "radical", "hom_space", "EndAlgebra", "endomorphism_algebra",
    "indecomposable_decomposition", "is_local", "is_simple", "simple_decomposition",
    "isomorphic", "socle_matches_coradical", "block_projections",
]
