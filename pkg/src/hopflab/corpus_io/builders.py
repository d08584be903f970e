"""Canonical example structures.

Basis orders are fixed and documented per builder; every builder output
passes ``validate``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from ..exactla import QQ, Cyclotomic, FieldSpec, inverse_rows, root_of_unity
from ..exactla.linalg import identity, unit_vector
from ..structures.core import Coalgebra, HopfAlgebra, dual


class InvalidParameters(ValueError):
    pass


# -- groups -----------------------------------------------------------------

def cyclic_table(n: int) -> tuple[list[list[int]], list[str]]:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return table, names[:n]


def symmetric_group(k: int = 3) -> tuple[list[list[int]], list[str]]:
    """Permutations of range(k) in lexicographic order; (s t)(x) = s(t(x))."""
    perms = list(itertools.permutations(range(k)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(s[t[x]] for x in range(k))] for t in perms] for s in perms]
    names = ["(" + "".join(str(x) for x in p) + ")" for p in perms]
    return table, names


def _perm_sign(p) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def alternating_in_symmetric(k: int = 3) -> list[int]:
    """Indices of the even permutations inside ``symmetric_group(k)``."""
    perms = list(itertools.permutations(range(k)))
    return [i for i, p in enumerate(perms) if _perm_sign(p) == 1]


def check_group_table(table: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Return (identity, inverses) or raise InvalidParameters."""
    n = len(table)
    if n == 0 or n > 24:
        raise InvalidParameters("group order must be between 1 and 24")
    if any(len(r) != n for r in table):
        raise InvalidParameters("group table is not square")
    for r in table:
        if sorted(r) != list(range(n)):
            raise InvalidParameters("group table rows are not permutations")
    for j in range(n):
        if sorted(table[i][j] for i in range(n)) != list(range(n)):
            raise InvalidParameters("group table columns are not permutations")
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise InvalidParameters("group table has no identity")
    e = ids[0]
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InvalidParameters("group table is not associative")
    inv = [next(b for b in range(n) if table[a][b] == e) for a in range(n)]
    return e, inv


def group_algebra(table, names=None, field: FieldSpec = QQ) -> HopfAlgebra:
    e, inv = check_group_table(table)
    n = len(table)
    names = names or [f"g{i}" for i in range(n)]
    F = field
    mult = {(i, j): {table[i][j]: F.one} for i in range(n) for j in range(n)}
    comult = {i: {(i, i): F.one} for i in range(n)}
    anti = [unit_vector(F, n, inv[i]) for i in range(n)]
    return HopfAlgebra.build(F, names, mult, unit_vector(F, n, e), comult, (F.one,) * n, anti)


def function_algebra(table, names=None, field: FieldSpec = QQ) -> HopfAlgebra:
    """Functions on a group: the dual of its group algebra (basis of point masses)."""
    return dual(group_algebra(table, names, field))


# -- comatrix and coalgebras with antipode ------------------------------------

def comatrix(d: int, field: FieldSpec = QQ) -> Coalgebra:
    """Basis e_ij at index i*d + j with Delta(e_ij) = sum_p e_ip (x) e_pj."""
    if d < 1:
        raise InvalidParameters("comatrix size must be positive")
    F = field
    names = [f"e{i}{j}" for i in range(d) for j in range(d)]
    comult = {i * d + j: {(i * d + p, p * d + j): F.one for p in range(d)}
              for i in range(d) for j in range(d)}
    counit = [F.one if i == j else F.zero for i in range(d) for j in range(d)]
    return Coalgebra.build(F, names, comult, counit)


def coalgebra_with_S(F_list, n_list, field: FieldSpec = QQ) -> tuple[Coalgebra, tuple]:
    """Direct sum of n_r copies of the d_r x d_r comatrix coalgebra with the
    map S cycling the copies by transposition and closing the cycle through
    conjugation by F_r.

    Basis order: block r, copy k (0-based), entry (i, j). Returns the
    coalgebra and the matrix of S (rows are images).
    """
    if len(F_list) != len(n_list) or not F_list:
        raise InvalidParameters("need matching nonempty F_list and n_list")
    K = field
    mats = []
    for Fr in F_list:
        M = [[K.parse(x) for x in row] for row in Fr]
        if any(len(row) != len(M) for row in M):
            raise InvalidParameters("F_r must be square")
        try:
            Minv = inverse_rows(K, M)
        except ZeroDivisionError:
            raise InvalidParameters("F_r must be invertible") from None
        mats.append((M, Minv))
    offsets = []
    names = []
    comult = {}
    counit = []
    pos = 0
    for r, ((M, _), n_r) in enumerate(zip(mats, n_list)):
        if n_r < 1:
            raise InvalidParameters("n_r must be positive")
        d = len(M)
        offsets.append(pos)
        for k in range(n_r):
            base = pos + k * d * d
            for i in range(d):
                for j in range(d):
                    names.append(f"e{r}.{k}.{i}{j}")
                    comult[base + i * d + j] = {(base + i * d + p, base + p * d + j): K.one for p in range(d)}
                    counit.append(K.one if i == j else K.zero)
        pos += n_r * d * d
    total = pos
    S = [[K.zero] * total for _ in range(total)]
    for r, ((M, Minv), n_r) in enumerate(zip(mats, n_list)):
        d = len(M)
        for k in range(n_r):
            base = offsets[r] + k * d * d
            for i in range(d):
                for j in range(d):
                    row = S[base + i * d + j]
                    if k + 1 < n_r:
                        row[base + d * d + j * d + i] = K.one
                    else:
                        # a_ij = sum_{p,q} F_ip e^{r,1}_{qp} (F^-1)_qj
                        first = offsets[r]
                        for p in range(d):
                            for q in range(d):
                                c = K.mul(M[i][p], Minv[q][j])
                                if c != K.zero:
                                    idx = first + q * d + p
                                    row[idx] = K.add(row[idx], c)
    C = Coalgebra.build(K, names, comult, counit)
    return C, tuple(tuple(r) for r in S)


# -- tensor products ----------------------------------------------------------

def tensor_hopf(A: HopfAlgebra, B: HopfAlgebra) -> HopfAlgebra:
    """A (x) B with basis a_i (x) b_j at index i*dim B + j."""
    if A.field != B.field:
        raise InvalidParameters("tensor factors over different fields")
    F = A.field
    m = B.dim
    names = [f"{a}.{b}" if a != "1" or b != "1" else "1" for a in A.names for b in B.names]
    mult = {}
    for i1, j1, i2, j2 in itertools.product(range(A.dim), range(m), range(A.dim), range(m)):
        entry = {}
        for k, c in A.mult[i1][i2]:
            for l, e in B.mult[j1][j2]:
                entry[k * m + l] = F.mul(c, e)
        mult[(i1 * m + j1, i2 * m + j2)] = entry
    comult = {}
    for i in range(A.dim):
        for j in range(m):
            entry = {}
            for p, q, c in A.comult[i]:
                for r, s, e in B.comult[j]:
                    key = (p * m + r, q * m + s)
                    entry[key] = F.add(entry.get(key, F.zero), F.mul(c, e))
            comult[i * m + j] = entry
    unit = [F.mul(a, b) for a in A.unit for b in B.unit]
    counit = [F.mul(a, b) for a in A.counit for b in B.counit]
    anti = [[F.mul(A.antipode[i][k], B.antipode[j][l]) for k in range(A.dim) for l in range(m)]
            for i in range(A.dim) for j in range(m)]
    return HopfAlgebra.build(F, names, mult, unit, comult, counit, anti)


def tensor_embedding_left(A: HopfAlgebra, B: HopfAlgebra) -> tuple:
    """Matrix of a -> a (x) 1 from A into A (x) B."""
    F = A.field
    return tuple(tuple(F.mul(F.one if k == i else F.zero, b) for k in range(A.dim) for b in B.unit)
                 for i in range(A.dim))


# -- Taft algebras ------------------------------------------------------------

def taft(n: int, field: FieldSpec | None = None) -> HopfAlgebra:
    """Taft algebra: g^n = 1, x^n = 0, x g = zeta g x, Delta x = x (x) 1 + g (x) x.

    Basis g^i x^j at index i + n*j. The default field is QQ for n = 2 and
    Cyclotomic(n) otherwise, with zeta its canonical root of unity.
    """
    if n < 2:
        raise InvalidParameters("taft needs n >= 2")
    F = field or (QQ if n == 2 else Cyclotomic(n))
    zeta = root_of_unity(F, n)
    d = n * n
    idx = lambda i, j: (i % n) + n * j

    def mono_name(i, j):
        g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
        x = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
        return (g + x) or "1"

    names = [mono_name(i, j) for j in range(n) for i in range(n)]
    mult = {}
    for j1 in range(n):
        for i1 in range(n):
            for j2 in range(n):
                for i2 in range(n):
                    # (g^i1 x^j1)(g^i2 x^j2) = zeta^(j1 i2) g^(i1+i2) x^(j1+j2)
                    entry = {}
                    if j1 + j2 < n:
                        entry[idx(i1 + i2, j1 + j2)] = F.pow(zeta, j1 * i2)
                    mult[(idx(i1, j1), idx(i2, j2))] = entry
    unit = unit_vector(F, d, 0)
    counit = [F.one if j == 0 else F.zero for j in range(n) for i in range(n)]
    proto = HopfAlgebra.build(F, names, mult, unit, {}, counit, identity(F, d))

    def tensor_pow(t, k):
        out = {(0, 0): F.one}
        for _ in range(k):
            out = proto.tensor_product(out, t)
        return out

    dg = {(1, 1): F.one}
    dx = {(n, 0): F.one, (1, n): F.one}
    comult = {}
    for j in range(n):
        for i in range(n):
            comult[idx(i, j)] = proto.tensor_product(tensor_pow(dg, i), tensor_pow(dx, j))
    ginv = unit_vector(F, d, idx(n - 1, 0))
    s_x = tuple(F.neg(c) for c in proto.product(ginv, unit_vector(F, d, idx(0, 1))))
    anti = []
    for j in range(n):
        for i in range(n):
            v = unit
            for _ in range(j):
                v = proto.product(v, s_x)
            for _ in range(i):
                v = proto.product(v, ginv)
            anti.append(v)
    return HopfAlgebra.build(F, names, mult, unit, comult, counit, anti)


def sweedler4() -> HopfAlgebra:
    """Sweedler's algebra over QQ, basis (1, g, x, gx)."""
    return taft(2, QQ)


# -- small quantum group ------------------------------------------------------

@lru_cache(maxsize=None)
def uqsl2(ell: int = 3) -> HopfAlgebra:
    """Restricted quantum sl2 at q = zeta_ell (ell odd), dimension ell^3.

    Relations K E = q^2 E K, K F = q^-2 F K, EF - FE = (K - K^-1)/(q - q^-1),
    E^ell = F^ell = 0, K^ell = 1; Delta E = E (x) K + 1 (x) E,
    Delta F = F (x) 1 + K^-1 (x) F, Delta K = K (x) K.
    Basis E^a F^b K^c at index a*ell^2 + b*ell + c.
    """
    if ell < 3 or ell % 2 == 0:
        raise InvalidParameters("uqsl2 needs an odd ell >= 3")
    F = Cyclotomic(ell)
    q = F.zeta
    qinv = F.inv(q)
    l = ell
    d = l**3
    idx = lambda a, b, c: a * l * l + b * l + (c % l)
    coef = F.inv(F.sub(q, qinv))

    def addto(acc, key, c):
        if key is None or c == F.zero:
            return
        v = F.add(acc.get(key, F.zero), c)
        if v == F.zero:
            acc.pop(key, None)
        else:
            acc[key] = v

    def times_F(elt):
        # right multiplication by F of a normal-form element {(a,b,c): coeff}
        out = {}
        for (a, b, c), v in elt.items():
            if b + 1 < l:
                addto(out, (a, b + 1, c), F.mul(v, F.pow(q, -2 * c)))
        return out

    FE_cache = {0: {(1, 0, 0): F.one}}

    def FbE(b):
        # normal form of F^b E
        if b not in FE_cache:
            prev = times_F(FbE(b - 1))
            out = dict(prev)
            addto(out, (0, b - 1, 1), F.neg(coef))
            addto(out, (0, b - 1, l - 1), coef)
            FE_cache[b] = out
        return FE_cache[b]

    def times_gen(elt, gen):
        out = {}
        for (a, b, c), v in elt.items():
            if gen == "K":
                addto(out, (a, b, (c + 1) % l), v)
            elif gen == "F":
                if b + 1 < l:
                    addto(out, (a, b + 1, c), F.mul(v, F.pow(q, -2 * c)))
            else:
                # E^a F^b K^c E = q^{2c} E^a (F^b E) K^c
                w = F.mul(v, F.pow(q, 2 * c))
                for (a2, b2, c2), u in FbE(b).items():
                    if a + a2 < l:
                        addto(out, (a + a2, b2, (c2 + c) % l), F.mul(w, u))
        return out

    monos = [(a, b, c) for a in range(l) for b in range(l) for c in range(l)]
    mult = {}
    for m1 in monos:
        for a2, b2, c2 in monos:
            elt = {m1: F.one}
            for gen in ["E"] * a2 + ["F"] * b2 + ["K"] * c2:
                elt = times_gen(elt, gen)
            mult[(idx(*m1), idx(a2, b2, c2))] = {idx(*k): v for k, v in elt.items()}

    def mono_name(a, b, c):
        parts = []
        for sym, e in (("E", a), ("F", b), ("K", c)):
            if e:
                parts.append(sym if e == 1 else f"{sym}^{e}")
        return "".join(parts) or "1"

    names = [mono_name(*m) for m in monos]
    unit = unit_vector(F, d, 0)
    counit = [F.one if a == 0 and b == 0 else F.zero for a, b, c in monos]
    proto = HopfAlgebra.build(F, names, mult, unit, {}, counit, identity(F, d))
    E, Fi, K, Kinv = idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1), idx(0, 0, l - 1)
    one = 0
    dE = {(E, K): F.one, (one, E): F.one}
    dF = {(Fi, one): F.one, (Kinv, Fi): F.one}
    dK = {(K, K): F.one}

    def tpow(t, k):
        out = {(0, 0): F.one}
        for _ in range(k):
            out = proto.tensor_product(out, t)
        return out

    comult = {}
    for a, b, c in monos:
        comult[idx(a, b, c)] = proto.tensor_product(proto.tensor_product(tpow(dE, a), tpow(dF, b)), tpow(dK, c))
    e_vec = lambda i: unit_vector(F, d, i)
    sE = tuple(F.neg(x) for x in proto.product(e_vec(E), e_vec(Kinv)))
    sF = tuple(F.neg(x) for x in proto.product(e_vec(K), e_vec(Fi)))
    sK = e_vec(Kinv)
    anti = []
    for a, b, c in monos:
        v = unit
        for _ in range(c):
            v = proto.product(v, sK)
        for _ in range(b):
            v = proto.product(v, sF)
        for _ in range(a):
            v = proto.product(v, sE)
        anti.append(v)
    return HopfAlgebra.build(F, names, mult, unit, comult, counit, anti)


def uqsl2_dual(ell: int = 3) -> HopfAlgebra:
    return dual(uqsl2(ell))


# -- registry -----------------------------------------------------------------

def _qc(n, field=QQ):
    table, names = cyclic_table(n)
    return group_algebra(table, names, field)


def _qs3():
    table, names = symmetric_group(3)
    return group_algebra(table, names)


def build(name: str, **params) -> object:
    """Build a corpus member by name; parameters are strings or ints."""
    from ..exactla import PrimeField

    def field_param():
        if "p" in params:
            return PrimeField(int(params["p"]))
        if "cyc" in params:
            return Cyclotomic(int(params["cyc"]))
        return QQ

    if name == "group_cyclic":
        return _qc(int(params.get("n", 2)), field_param())
    if name == "function_cyclic":
        table, names = cyclic_table(int(params.get("n", 2)))
        return function_algebra(table, names, field_param())
    if name == "group_s3":
        return _qs3()
    if name == "function_s3":
        table, names = symmetric_group(3)
        return function_algebra(table, names)
    if name == "sweedler4":
        return sweedler4()
    if name == "taft":
        return taft(int(params.get("n", 3)))
    if name == "uqsl2":
        return uqsl2(int(params.get("ell", 3)))
    if name == "uqsl2_dual":
        return uqsl2_dual(int(params.get("ell", 3)))
    if name == "comatrix":
        return comatrix(int(params.get("d", 2)), field_param())
    if name == "sweedler4_x_qc3":
        return tensor_hopf(sweedler4(), _qc(3))
    if name == "coalgebra_with_S":
        mats = _json_param(params.get("F", "[[0,1],[1,0]]"))
        ns = _json_param(params.get("n", "2"))
        if mats and not isinstance(mats[0][0], list):
            mats = [mats]
        if isinstance(ns, int):
            ns = [ns]
        return coalgebra_with_S(mats, ns, field_param())
    raise InvalidParameters(f"unknown corpus member {name!r}")


BUILDER_NAMES = ("group_cyclic", "function_cyclic", "group_s3", "function_s3", "sweedler4",
                 "taft", "uqsl2", "uqsl2_dual", "comatrix", "sweedler4_x_qc3", "coalgebra_with_S")


def _json_param(value):
    import json

    if not isinstance(value, str):
        return value
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        raise InvalidParameters(f"cannot parse parameter value {value!r}") from None


def default_corpus() -> list[tuple[str, HopfAlgebra]]:
    """Hopf algebras every suite runs on, in a fixed order."""
    from ..exactla import PrimeField

    return [
        ("QC2", _qc(2)),
        ("QC3", _qc(3)),
        ("QS3", _qs3()),
        ("QS3_dual", build("function_s3")),
        ("GF2C2", _qc(2, PrimeField(2))),
        ("GF2C2_dual", build("function_cyclic", n=2, p=2)),
        ("H4", sweedler4()),
        ("T3", taft(3)),
        ("T4", taft(4)),
        ("H4xQC3", build("sweedler4_x_qc3")),
        ("uqsl2_3", uqsl2(3)),
        ("uqsl2_3_dual", uqsl2_dual(3)),
    ]


def bundled_exact_sequences() -> list[tuple[str, HopfAlgebra, HopfAlgebra, tuple]]:
    """(name, A, B, iota) for the normal Hopf subalgebras shipped with the corpus."""
    from ..exactla import Subspace
    from ..structures.core import restrict_hopf

    h4 = sweedler4()
    k = group_algebra([[0]], ["1"])
    s3 = _qs3()
    even = Subspace.span(QQ, s3.dim, [s3.basis(i) for i in alternating_in_symmetric(3)])
    a3 = restrict_hopf(s3, even)
    big = tensor_hopf(h4, _qc(3))
    return [
        ("k_in_H4", k, h4, (h4.unit,)),
        ("QA3_in_QS3", a3, s3, even.basis),
        ("H4_in_H4xQC3", h4, big, tensor_embedding_left(h4, _qc(3))),
    ]
