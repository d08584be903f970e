"""Associated graded Hopf algebras, diagrams, Yetter-Drinfeld data and bosonization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactla import Subspace, left_kernel_rows, rank
from .exactla.linalg import unit_vector
from .structures.axioms import hopf_map_violations, validate
from .structures.core import HopfAlgebra, _vector_name, in_tensor_product, restrict_hopf, tensor_coords
from .structures.filtrations import (
    Filtration,
    FiltrationError,
    adapted_basis,
    coradical,
    coradical_filtration,
    standard_filtration,
    verify_hopf_filtration,
)
from .util import memo


class GradingError(RuntimeError):
    pass


@dataclass(frozen=True)
class GradedHopf:
    hopf: HopfAlgebra
    degree_of: tuple[int, ...]
    layer_dims: tuple[int, ...]
    source_basis: tuple[tuple, ...] = ()

    @property
    def top_degree(self) -> int:
        return len(self.layer_dims) - 1

    def layer(self, n: int) -> Subspace:
        h = self.hopf
        return Subspace.coordinate(h.field, h.dim, [i for i, k in enumerate(self.degree_of) if k == n])

    def partial_sum(self, n: int) -> Subspace:
        h = self.hopf
        return Subspace.coordinate(h.field, h.dim, [i for i, k in enumerate(self.degree_of) if k <= n])


def associated_graded(h: HopfAlgebra, filt: Filtration) -> GradedHopf:
    """Structure constants induced on the graded complements of ``filt``."""
    failures = verify_hopf_filtration(h, filt)
    if failures:
        raise FiltrationError("not a Hopf filtration: " + "; ".join(failures))
    F, d = h.field, h.dim
    B = adapted_basis(F, filt)
    deg = B.degrees
    mult = {}
    for a in range(d):
        for b in range(d):
            c = B.coords(F, h.product(B.rows[a], B.rows[b]))
            mult[(a, b)] = {k: x for k, x in enumerate(c) if x != F.zero and deg[k] == deg[a] + deg[b]}
    comult = {}
    for a in range(d):
        t = B.tensor_coords(F, h.coproduct(B.rows[a]))
        comult[a] = {(p, q): x for (p, q), x in t.items() if deg[p] + deg[q] == deg[a]}
    unit = B.coords(F, h.unit)
    counit = [h.counit_value(B.rows[a]) if deg[a] == 0 else F.zero for a in range(d)]
    anti = []
    for a in range(d):
        c = B.coords(F, h.apply_antipode(B.rows[a]))
        anti.append(tuple(x if deg[k] == deg[a] else F.zero for k, x in enumerate(c)))
    names = [_vector_name(h, r) for r in B.rows]
    G = HopfAlgebra.build(F, names, mult, unit, comult, counit, anti)
    return GradedHopf(G, deg, filt.layer_dims(), B.rows)


@memo
def gr_standard(h: HopfAlgebra) -> GradedHopf:
    return associated_graded(h, standard_filtration(h))


def homogeneous_projection(G: GradedHopf) -> tuple[tuple, ...]:
    F, d = G.hopf.field, G.hopf.dim
    return tuple(unit_vector(F, d, i) if G.degree_of[i] == 0 else (F.zero,) * d for i in range(d))


def coinvariants(B: HopfAlgebra, pi: Sequence[Sequence]) -> Subspace:
    """{x : (id (x) pi) Delta x = x (x) pi(1)} for a coalgebra map pi: B -> C."""
    F, d = B.field, B.dim
    c = len(pi[0]) if pi else 0
    one_c = [F.zero] * c
    for i, a in enumerate(B.unit):
        if a != F.zero:
            for j, x in enumerate(pi[i]):
                if x != F.zero:
                    one_c[j] = F.add(one_c[j], F.mul(a, x))
    rows = []
    for i in range(d):
        row: dict = {}
        for j, k, a in B.comult[i]:
            for l, x in enumerate(pi[k]):
                if x != F.zero:
                    key = j * c + l
                    row[key] = F.add(row.get(key, F.zero), F.mul(a, x))
        for l, x in enumerate(one_c):
            if x != F.zero:
                key = i * c + l
                row[key] = F.sub(row.get(key, F.zero), x)
        rows.append({k: v for k, v in row.items() if v != F.zero})
    return Subspace.span(F, d, left_kernel_rows(F, rows, d * c))


@dataclass(frozen=True)
class Diagram:
    G: GradedHopf
    R: Subspace
    degrees: tuple[int, ...]
    layer_dims: tuple[int, ...]
    l: int
    mult: tuple  # mult[a][b] = dense coords in R
    comult: tuple  # comult[a] = {(b, c): coeff}, braided coproduct in R (x) R
    unit: tuple
    counit: tuple

    @property
    def dim(self) -> int:
        return self.R.dim


def _theta_rows(G: GradedHopf) -> list[tuple]:
    # theta(a) = a_(1) S(pi(a_(2)))
    h = G.hopf
    F, d = h.field, h.dim
    out = []
    for j in range(d):
        acc = [F.zero] * d
        for p, q, c in h.comult[j]:
            if G.degree_of[q] != 0:
                continue
            prod = h.product(unit_vector(F, d, p), h.antipode[q])
            for t, x in enumerate(prod):
                if x != F.zero:
                    acc[t] = F.add(acc[t], F.mul(c, x))
        out.append(tuple(acc))
    return out


def braided_coproduct(G: GradedHopf, theta: list, v: Sequence) -> dict:
    h = G.hopf
    F = h.field
    out: dict = {}
    for (j, k), c in h.coproduct(v).items():
        for t, x in enumerate(theta[j]):
            if x != F.zero:
                out[(t, k)] = F.add(out.get((t, k), F.zero), F.mul(c, x))
    return {k: v for k, v in out.items() if v != F.zero}


def diagram_of_graded(G: GradedHopf) -> Diagram:
    h = G.hopf
    R = coinvariants(h, homogeneous_projection(G))
    basis: list = []
    degs: list = []
    layer_dims = []
    for n in range(G.top_degree + 1):
        Rn = R.intersect(G.layer(n))
        basis.extend(Rn.basis)
        degs.extend([n] * Rn.dim)
        layer_dims.append(Rn.dim)
    while layer_dims and layer_dims[-1] == 0 and len(layer_dims) > 1:
        layer_dims.pop()
    if len(basis) != R.dim or tuple(basis) != R.basis:
        raise GradingError("coinvariants are not spanned by homogeneous elements")
    if layer_dims[0] != 1 or not R.contains(h.unit):
        raise GradingError("degree-0 part of the diagram is not the span of 1")
    n_r = R.dim
    mult = []
    for a in range(n_r):
        row = []
        for b in range(n_r):
            c = R.coordinates(h.product(R.basis[a], R.basis[b]))
            if c is None:
                raise GradingError("diagram is not closed under multiplication")
            row.append(c)
        mult.append(tuple(row))
    theta = _theta_rows(G)
    comult = []
    for a in range(n_r):
        t = tensor_coords(R, R, braided_coproduct(G, theta, R.basis[a]))
        if t is None:
            raise GradingError("braided coproduct leaves the diagram")
        comult.append(t)
    unit = R.coordinates(h.unit)
    counit = tuple(h.counit_value(b) for b in R.basis)
    l = sum(1 for k in G.degree_of if k == 0)
    D = Diagram(G, R, tuple(degs), tuple(layer_dims), l, tuple(mult), tuple(comult), unit, counit)
    bad = diagram_violations(D)
    if bad:
        raise GradingError("; ".join(bad))
    return D


@memo
def diagram(h: HopfAlgebra) -> Diagram:
    return diagram_of_graded(gr_standard(h))


def diagram_violations(D: Diagram) -> list[str]:
    F = D.R.field
    out = []
    one = D.unit
    one_idx = [i for i, x in enumerate(one) if x != F.zero]
    for a in range(D.dim):
        if D.degrees[a] != 1:
            continue
        expected: dict = {}
        for i in one_idx:
            expected[(a, i)] = F.add(expected.get((a, i), F.zero), one[i])
            expected[(i, a)] = F.add(expected.get((i, a), F.zero), one[i])
        expected = {k: v for k, v in expected.items() if v != F.zero}
        if D.comult[a] != expected:
            out.append(f"degree-one element {a} of the diagram is not braided primitive")
    return out


def braided_antipode(D: Diagram) -> tuple[tuple, ...]:
    """Convolution inverse of the identity of R, by recursion on degree."""
    F = D.R.field
    n = D.dim
    order = sorted(range(n), key=lambda a: D.degrees[a])
    S: dict[int, tuple] = {}

    def rprod(x, y):
        out = [F.zero] * n
        for i, a in enumerate(x):
            if a == F.zero:
                continue
            for j, b in enumerate(y):
                if b == F.zero:
                    continue
                ab = F.mul(a, b)
                for k, c in enumerate(D.mult[i][j]):
                    if c != F.zero:
                        out[k] = F.add(out[k], F.mul(ab, c))
        return tuple(out)

    for a in order:
        if D.degrees[a] == 0:
            # R^0 = k1 and the unit is the only basis vector there
            S[a] = unit_vector(F, n, a)
            continue
        acc = [F.zero] * n
        top_terms = 0
        for (p, q), c in D.comult[a].items():
            if D.degrees[p] == D.degrees[a]:
                top_terms += 1
                continue
            prod = rprod(S[p], unit_vector(F, n, q))
            for k, x in enumerate(prod):
                if x != F.zero:
                    acc[k] = F.sub(acc[k], F.mul(c, x))
        S[a] = tuple(acc)
    return tuple(S[a] for a in range(n))


@dataclass(frozen=True)
class YDModuleData:
    L: HopfAlgebra
    dim: int
    action: tuple  # action[h][a] = row vector h . v_a
    coaction: tuple  # coaction[a] = ((l, b, c), ...) meaning v_a -> sum c e_l (x) v_b


def yd_structure(G: GradedHopf, D: Diagram) -> YDModuleData:
    """Adjoint action of the degree-0 Hopf subalgebra on R and the coaction (pi (x) id) Delta."""
    h = G.hopf
    F, d = h.field, h.dim
    l = D.l
    L = restrict_hopf(h, Subspace.coordinate(F, d, range(l)), names=h.names[:l])
    R = D.R
    action = []
    for x in range(l):
        rows = []
        for a in range(D.dim):
            acc = [F.zero] * d
            for p, q, c in h.comult[x]:
                prod = h.product(h.product(unit_vector(F, d, p), R.basis[a]), h.antipode[q])
                for t, y in enumerate(prod):
                    if y != F.zero:
                        acc[t] = F.add(acc[t], F.mul(c, y))
            coords = R.coordinates(acc)
            if coords is None:
                raise GradingError("adjoint action leaves the diagram")
            rows.append(coords)
        action.append(tuple(rows))
    coaction = []
    for a in range(D.dim):
        t = h.coproduct(R.basis[a])
        by_left: dict = {}
        for (p, q), c in t.items():
            if G.degree_of[p] == 0:
                by_left.setdefault(p, [F.zero] * d)[q] = c
        terms = []
        for p in sorted(by_left):
            coords = R.coordinates(by_left[p])
            if coords is None:
                raise GradingError("coaction leaves the diagram")
            terms.extend((p, b, x) for b, x in enumerate(coords) if x != F.zero)
        coaction.append(tuple(terms))
    yd = YDModuleData(L, D.dim, tuple(action), tuple(coaction))
    bad = yd_violations(yd)
    if bad:
        raise GradingError("; ".join(bad))
    return yd


def _act(F, yd: YDModuleData, hvec: Sequence, v: Sequence) -> tuple:
    out = [F.zero] * yd.dim
    for x, hx in enumerate(hvec):
        if hx == F.zero:
            continue
        for a, va in enumerate(v):
            if va == F.zero:
                continue
            c = F.mul(hx, va)
            for b, y in enumerate(yd.action[x][a]):
                if y != F.zero:
                    out[b] = F.add(out[b], F.mul(c, y))
    return tuple(out)


def _coact(F, yd: YDModuleData, v: Sequence) -> dict:
    out: dict = {}
    for a, va in enumerate(v):
        if va == F.zero:
            continue
        for l, b, c in yd.coaction[a]:
            out[(l, b)] = F.add(out.get((l, b), F.zero), F.mul(va, c))
    return {k: x for k, x in out.items() if x != F.zero}


def yd_violations(yd: YDModuleData) -> list[str]:
    L = yd.L
    F, n, v = L.field, L.dim, yd.dim
    out = []
    En = [unit_vector(F, n, i) for i in range(n)]
    Ev = [unit_vector(F, v, a) for a in range(v)]
    for a in range(v):
        if _act(F, yd, L.unit, Ev[a]) != Ev[a]:
            out.append("unit does not act trivially")
            break
    for x in range(n):
        for y in range(n):
            xy = L.basis_product(x, y)
            for a in range(v):
                if _act(F, yd, En[x], yd.action[y][a]) != _act(F, yd, xy, Ev[a]):
                    out.append(f"action is not associative at ({L.names[x]}, {L.names[y]})")
                    break
    coacts = [_coact(F, yd, Ev[a]) for a in range(v)]
    for a in range(v):
        co = coacts[a]
        counit = [F.zero] * v
        for (l, b), c in co.items():
            counit[b] = F.add(counit[b], F.mul(L.counit[l], c))
        if tuple(counit) != Ev[a]:
            out.append("coaction fails the counit law")
        lhs: dict = {}
        rhs: dict = {}
        for (l, b), c in co.items():
            for p, q, w in L.comult[l]:
                lhs[(p, q, b)] = F.add(lhs.get((p, q, b), F.zero), F.mul(c, w))
            for (l2, b2), w in coacts[b].items():
                rhs[(l, l2, b2)] = F.add(rhs.get((l, l2, b2), F.zero), F.mul(c, w))
        if {k: x for k, x in lhs.items() if x != F.zero} != {k: x for k, x in rhs.items() if x != F.zero}:
            out.append("coaction is not coassociative")
    # delta(h.v) = h1 v_(-1) S(h3) (x) h2 . v_(0)
    conj: dict = {}

    def sandwich(h1, l, h3):
        key = (h1, l, h3)
        if key not in conj:
            conj[key] = L.product(L.basis_product(h1, l), L.antipode[h3])
        return conj[key]

    for x in range(n):
        d2: dict = {}
        for p, q, c in L.comult[x]:
            for r, s, w in L.comult[q]:
                d2[(p, r, s)] = F.add(d2.get((p, r, s), F.zero), F.mul(c, w))
        d2 = {k: w for k, w in d2.items() if w != F.zero}
        for a in range(v):
            lhs = _coact(F, yd, yd.action[x][a])
            rhs = {}
            for (l, b), c in coacts[a].items():
                for (h1, h2, h3), w in d2.items():
                    left = sandwich(h1, l, h3)
                    right = yd.action[h2][b]
                    cw = F.mul(c, w)
                    for i, y in enumerate(left):
                        if y == F.zero:
                            continue
                        cwy = F.mul(cw, y)
                        for j, z in enumerate(right):
                            if z != F.zero:
                                rhs[(i, j)] = F.add(rhs.get((i, j), F.zero), F.mul(cwy, z))
            rhs = {k: y for k, y in rhs.items() if y != F.zero}
            if lhs != rhs:
                out.append(f"Yetter-Drinfeld compatibility fails at ({L.names[x]}, v{a})")
    return out


def bosonization(D: Diagram, L: HopfAlgebra, yd: YDModuleData) -> HopfAlgebra:
    """Smash product and smash coproduct on R (x) L, basis r_a # l_b at a*dim L + b."""
    F = L.field
    nr, nl = D.dim, L.dim
    if nr == 1:
        return L
    idx = lambda a, b: a * nl + b
    names = [f"r{a}#{L.names[b]}" for a in range(nr) for b in range(nl)]
    mult = {}
    for a in range(nr):
        for b in range(nl):
            for c in range(nr):
                for e in range(nl):
                    acc: dict = {}
                    for p, q, k in L.comult[b]:
                        for s, x in enumerate(yd.action[p][c]):
                            if x == F.zero:
                                continue
                            kx = F.mul(k, x)
                            for t, y in enumerate(D.mult[a][s]):
                                if y == F.zero:
                                    continue
                                kxy = F.mul(kx, y)
                                for u, z in L.mult[q][e]:
                                    key = idx(t, u)
                                    acc[key] = F.add(acc.get(key, F.zero), F.mul(kxy, z))
                    mult[(idx(a, b), idx(c, e))] = acc
    comult = {}
    for a in range(nr):
        for b in range(nl):
            acc: dict = {}
            for (a1, a2), k in D.comult[a].items():
                for lam, a3, k2 in yd.coaction[a2]:
                    for b1, b2, k3 in L.comult[b]:
                        kk = F.mul(F.mul(k, k2), k3)
                        for u, z in L.mult[lam][b1]:
                            key = (idx(a1, u), idx(a3, b2))
                            acc[key] = F.add(acc.get(key, F.zero), F.mul(kk, z))
            comult[idx(a, b)] = acc
    unit = [F.mul(x, y) for x in D.unit for y in L.unit]
    counit = [F.mul(x, y) for x in D.counit for y in L.counit]
    d = nr * nl
    proto = HopfAlgebra.build(F, names, mult, unit, comult, counit, [unit_vector(F, d, i) for i in range(d)])
    SR = braided_antipode(D)
    one_r = D.unit
    anti = []
    for a in range(nr):
        for b in range(nl):
            total = [F.zero] * d
            for lam, a2, k in yd.coaction[a]:
                sl = L.apply_antipode(L.basis_product(lam, b))
                left = [F.zero] * d
                for i, x in enumerate(one_r):
                    if x != F.zero:
                        for j, y in enumerate(sl):
                            if y != F.zero:
                                left[idx(i, j)] = F.add(left[idx(i, j)], F.mul(x, y))
                right = [F.zero] * d
                for i, x in enumerate(SR[a2]):
                    if x != F.zero:
                        for j, y in enumerate(L.unit):
                            if y != F.zero:
                                right[idx(i, j)] = F.add(right[idx(i, j)], F.mul(x, y))
                prod = proto.product(left, right)
                for t, x in enumerate(prod):
                    if x != F.zero:
                        total[t] = F.add(total[t], F.mul(k, x))
            anti.append(tuple(total))
    return HopfAlgebra.build(F, names, mult, unit, comult, counit, anti)


def verify_bosonization_iso(G: GradedHopf) -> dict:
    """Checks that r # h -> r h is a Hopf algebra isomorphism R # G_0 -> G."""
    h = G.hopf
    F, d = h.field, h.dim
    D = diagram_of_graded(G)
    yd = yd_structure(G, D)
    L = yd.L
    B = bosonization(D, L, yd)
    b_fail = validate(B)
    phi = []
    for a in range(D.dim):
        for b in range(L.dim):
            phi.append(h.product(D.R.basis[a], unit_vector(F, d, b)))
    bij = len(phi) == d and rank(F, phi, d) == d
    map_fail = hopf_map_violations(phi, B, h) if len(phi) == d else ["dimension mismatch"]
    # R # k1 and R # L are left coideals
    full = Subspace.full(F, d)
    rk = Subspace.span(F, d, [unit_vector(F, d, a * L.dim + i) for a in range(D.dim)
                              for i, x in enumerate(L.unit) if x != F.zero]) if D.dim > 1 else None
    coideal_ok = True
    if rk is not None:
        coideal_ok = all(in_tensor_product(full, rk, B.coproduct(v)) for v in rk.basis)
    return {
        "diagram_layer_dims": D.layer_dims,
        "dim_R": D.dim,
        "dim_L": L.dim,
        "dim_count_ok": D.dim * L.dim == d,
        "bosonization_violations": b_fail,
        "bijective": bij,
        "map_violations": map_fail,
        "left_coideal_spot_check": coideal_ok,
        "ok": bij and not b_fail and not map_fail and coideal_ok and D.dim * L.dim == d,
    }


def check_graded_standard_filtration(G: GradedHopf) -> dict:
    """Standard filtration of G against partial sums of its layers."""
    h = G.hopf
    std = standard_filtration(h)
    n_max = max(std.T, G.top_degree)
    terms = [std.term(n) == G.partial_sum(n) for n in range(n_max + 1)]
    cor = coradical(h)
    cor_in_0 = G.layer(0).contains_subspace(cor)
    cf = coradical_filtration(h)
    cograded = all(cf.term(n) == G.partial_sum(n) for n in range(max(cf.T, G.top_degree) + 1))
    return {
        "standard_dims": std.dims,
        "layer_partial_dims": tuple(G.partial_sum(n).dim for n in range(n_max + 1)),
        "termwise_equal": all(terms),
        "coradical_in_degree_0": cor_in_0,
        "coradically_graded": cograded,
        "ok": all(terms) and cor_in_0,
    }
