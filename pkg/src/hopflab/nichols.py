"""Braidings from Yetter-Drinfeld data and truncated Nichols algebra dimensions.

The n-th graded piece of the Nichols algebra is the image of the quantum
symmetrizer on V^(x)n: the sum over all permutations of their braid lifts.
Matrices act on row vectors; tensor bases are ordered lexicographically.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .corpus_io.builders import cyclic_table, group_algebra
from .exactla import FieldSpec, root_of_unity
from .exactla.linalg import rank, to_sparse, unit_vector
from .graded import YDModuleData, _act, _coact, diagram, gr_standard, yd_structure, yd_violations


class BraidingError(ValueError):
    pass


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class Braiding:
    field: FieldSpec
    dim: int
    matrix: tuple  # dim^2 x dim^2, row (a, b) = c(v_a (x) v_b)


@dataclass(frozen=True)
class NicholsTruncation:
    dims: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.dims)


def braiding_from_yd(yd: YDModuleData, check: bool = True) -> Braiding:
    """c(v (x) w) = v_(-1).w (x) v_(0)."""
    F, v, L = yd.L.field, yd.dim, yd.L
    rows = []
    for a in range(v):
        co = _coact(F, yd, unit_vector(F, v, a))
        for b in range(v):
            row = [F.zero] * (v * v)
            for (l, a2), c in co.items():
                w = _act(F, yd, unit_vector(F, L.dim, l), unit_vector(F, v, b))
                for x, y in enumerate(w):
                    if y != F.zero:
                        row[x * v + a2] = F.add(row[x * v + a2], F.mul(c, y))
            rows.append(tuple(row))
    c = Braiding(F, v, tuple(rows))
    if check:
        bad = braiding_violations(c)
        if bad:
            raise BraidingError("; ".join(bad))
    return c


def _sparse_rows(F, M) -> list[dict]:
    return [to_sparse(F, r) for r in M]


def _local(c: Braiding, n: int, i: int) -> list[dict]:
    """id^(i) (x) c (x) id^(n-i-2) on V^(x)n, as sparse rows."""
    F, v = c.field, c.dim
    cs = _sparse_rows(F, c.matrix)
    out = []
    for word in itertools.product(range(v), repeat=n):
        a, b = word[i], word[i + 1]
        row = {}
        for k, x in cs[a * v + b].items():
            new = list(word)
            new[i], new[i + 1] = divmod(k, v)
            row[_index(new, v)] = x
        out.append(row)
    return out


def _index(word, v: int) -> int:
    k = 0
    for x in word:
        k = k * v + x
    return k


def _mul(F, A: list[dict], B: list[dict]) -> list[dict]:
    out = []
    add, mul, zero = F.add, F.mul, F.zero
    for row in A:
        acc: dict = {}
        for k, x in row.items():
            for j, y in B[k].items():
                acc[j] = add(acc.get(j, zero), mul(x, y))
        out.append({j: y for j, y in acc.items() if y != zero})
    return out


def braiding_violations(c: Braiding) -> list[str]:
    F, v = c.field, c.dim
    out = []
    if rank(F, c.matrix, v * v) != v * v:
        out.append("braiding is not invertible")
    c1, c2 = _local(c, 3, 0), _local(c, 3, 1)
    if _mul(F, _mul(F, c1, c2), c1) != _mul(F, _mul(F, c2, c1), c2):
        out.append("braid relation fails")
    return out


def flip(F: FieldSpec, v: int) -> Braiding:
    rows = []
    for a in range(v):
        for b in range(v):
            rows.append(unit_vector(F, v * v, b * v + a))
    return Braiding(F, v, tuple(rows))


def diagonal_braiding(F: FieldSpec, q: Sequence[Sequence]) -> Braiding:
    """c(v_a (x) v_b) = q[a][b] v_b (x) v_a."""
    v = len(q)
    rows = []
    for a in range(v):
        for b in range(v):
            row = [F.zero] * (v * v)
            row[b * v + a] = q[a][b]
            rows.append(tuple(row))
    return Braiding(F, v, tuple(rows))


# -- symmetrizers -------------------------------------------------------------

def _guard(c: Braiding, n: int, allow_large: bool) -> None:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if not allow_large and (n > 6 or c.dim ** n > 729):
        raise SizeGuardError(f"V^(x){n} with dim V = {c.dim} exceeds the default size limit")


def _lifts(c: Braiding, n: int) -> dict:
    """Braid lift of every permutation, built along a reduced word for each.

    A permutation p (one-line tuple) is reached from p s_i with one fewer
    inversion, and lift(p) = lift(p s_i) C_i."""
    F = c.field
    N = c.dim ** n
    local = [_local(c, n, i) for i in range(n - 1)]
    ident = tuple(range(n))
    lifts = {ident: [{k: F.one} for k in range(N)]}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for i in range(n - 1):
                if p[i] < p[i + 1]:
                    q = list(p)
                    q[i], q[i + 1] = q[i + 1], q[i]
                    q = tuple(q)
                    if q not in lifts:
                        lifts[q] = _mul(F, lifts[p], local[i])
                        nxt.append(q)
        frontier = nxt
    return lifts


def random_reduced_word(p: Sequence[int], rng: random.Random) -> list[int]:
    """Letters i_1..i_k with p = s_(i_1) ... s_(i_k), peeling random descents."""
    p = list(p)
    word = []
    while True:
        desc = [i for i in range(len(p) - 1) if p[i] > p[i + 1]]
        if not desc:
            break
        i = rng.choice(desc)
        p[i], p[i + 1] = p[i + 1], p[i]
        word.append(i)
    return word[::-1]


def lift_of_word(c: Braiding, n: int, word: Sequence[int]) -> list[dict]:
    F = c.field
    M = [{k: F.one} for k in range(c.dim ** n)]
    local = {}
    for i in word:
        if i not in local:
            local[i] = _local(c, n, i)
        M = _mul(F, M, local[i])
    return M


def check_lift_independence(c: Braiding, n: int, trials: int = 3, seed: int = 0) -> bool:
    """Lifts along random alternative reduced words agree with the canonical ones."""
    rng = random.Random(seed)
    lifts = _lifts(c, n)
    for p, M in lifts.items():
        for _ in range(trials):
            if lift_of_word(c, n, random_reduced_word(p, rng)) != M:
                return False
    return True


def quantum_symmetrizer(c: Braiding, n: int, allow_large: bool = False) -> list[dict]:
    _guard(c, n, allow_large)
    F = c.field
    N = c.dim ** n
    if n <= 1:
        return [{k: F.one} for k in range(N)]
    if n <= 4 and not check_lift_independence(c, n):
        raise BraidingError("braid lifts depend on the reduced word")
    total = [dict() for _ in range(N)]
    for M in _lifts(c, n).values():
        for r, row in enumerate(M):
            acc = total[r]
            for k, x in row.items():
                acc[k] = F.add(acc.get(k, F.zero), x)
    return [{k: x for k, x in row.items() if x != F.zero} for row in total]


def nichols_dims(obj, n_max: int, allow_large: bool = False) -> NicholsTruncation:
    c = obj if isinstance(obj, Braiding) else braiding_from_yd(obj)
    F = c.field
    _guard(c, n_max, allow_large)  # fail before spending time on lower degrees
    dims = []
    for n in range(n_max + 1):
        S = quantum_symmetrizer(c, n, allow_large)
        dims.append(rank(F, S, c.dim ** n))
    if dims[0] != 1 or (n_max >= 1 and dims[1] != c.dim):
        raise BraidingError("symmetrizer ranks in degrees 0 and 1 are wrong")
    return NicholsTruncation(tuple(dims))


# -- Yetter-Drinfeld data -----------------------------------------------------

def cyclic_yd(n: int, degrees: Sequence[int], chars: Sequence, field: FieldSpec) -> YDModuleData:
    """Diagonal YD module over the group algebra of C_n.

    v_a has coaction g^degrees[a] (x) v_a and g acts on it by chars[a]."""
    table, names = cyclic_table(n)
    L = group_algebra(table, names, field)
    F = field
    v = len(degrees)
    action = []
    for j in range(n):
        action.append(tuple(tuple(F.pow(F.parse(chars[a]), j) if b == a else F.zero for b in range(v))
                            for a in range(v)))
    coaction = tuple(((degrees[a] % n, a, F.one),) for a in range(v))
    yd = YDModuleData(L, v, tuple(action), coaction)
    bad = yd_violations(yd)
    if bad:
        raise BraidingError("; ".join(bad))
    return yd


def trivial_yd(L, v: int) -> YDModuleData:
    F = L.field
    action = tuple(tuple(tuple(F.mul(L.counit[x], F.one) if b == a else F.zero for b in range(v))
                         for a in range(v)) for x in range(L.dim))
    coaction = tuple(tuple((l, a, u) for l, u in enumerate(L.unit) if u != F.zero) for a in range(v))
    return YDModuleData(L, v, action, coaction)


def zeta_yd(n: int) -> YDModuleData:
    """1-dim V over the cyclotomic group algebra of C_n: coaction by g, g acts by zeta_n."""
    from .exactla import Cyclotomic

    F = Cyclotomic(n)
    return cyclic_yd(n, [1], [root_of_unity(F, n)], F)


def restrict_yd(yd: YDModuleData, indices: Sequence[int]) -> YDModuleData:
    """The YD submodule on a set of basis indices (must be stable)."""
    F = yd.L.field
    idx = list(indices)
    pos = {a: k for k, a in enumerate(idx)}
    action = []
    for x in range(yd.L.dim):
        rows = []
        for a in idx:
            row = yd.action[x][a]
            if any(y != F.zero and b not in pos for b, y in enumerate(row)):
                raise BraidingError("indices are not stable under the action")
            rows.append(tuple(row[b] for b in idx))
        action.append(tuple(rows))
    coaction = []
    for a in idx:
        terms = []
        for l, b, c in yd.coaction[a]:
            if b not in pos:
                raise BraidingError("indices are not stable under the coaction")
            terms.append((l, pos[b], c))
        coaction.append(tuple(terms))
    return YDModuleData(yd.L, len(idx), tuple(action), tuple(coaction))


def degree_one_yd(h) -> YDModuleData:
    """R^1 of the diagram of gr H with its YD structure."""
    D = diagram(h)
    yd = yd_structure(gr_standard(h), D)
    return restrict_yd(yd, [a for a, g in enumerate(D.degrees) if g == 1])


def diagram_is_nichols(h, allow_large: bool = False) -> dict:
    """Compare Nichols dims of R^1 with the diagram's layer dims (report only)."""
    D = diagram(h)
    layers = tuple(D.layer_dims)
    yd = degree_one_yd(h)
    top = len(layers)
    dims = nichols_dims(yd, top, allow_large).dims
    return {"diagram_layers": layers, "nichols_dims": dims, "equal": dims[:len(layers)] == layers and dims[-1] == 0}


__all__ = [
    "Braiding", "BraidingError", "SizeGuardError", "NicholsTruncation", "braiding_from_yd",
    "braiding_violations", "flip", "diagonal_braiding", "random_reduced_word", "lift_of_word",
    "check_lift_independence", "quantum_symmetrizer", "nichols_dims", "cyclic_yd", "trivial_yd",
    "zeta_yd", "restrict_yd", "degree_one_yd", "diagram_is_nichols",
]
