"""Coradical, wedges, coradical and standard filtrations, Hopf coradical, J_omega."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactla import RowReducer, Subspace, inverse_rows, preimage, quotient_basis, rank
from ..exactla.linalg import mat_mul, to_sparse, unit_vector
from ..util import memo
from .core import AlgebraData, HopfAlgebra, dual, in_tensor_product, restrict_hopf
from .radical import jacobson_radical


class FiltrationError(RuntimeError):
    pass


class CrossCheckError(RuntimeError):
    """Two independent computations of the same object disagree."""


@dataclass(frozen=True)
class Filtration:
    chain: tuple[Subspace, ...]

    @property
    def T(self) -> int:
        return len(self.chain) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.chain)

    def layer_dims(self) -> tuple[int, ...]:
        d = self.dims
        return tuple(d[0:1]) + tuple(d[i] - d[i - 1] for i in range(1, len(d)))

    def term(self, n: int) -> Subspace:
        return self.chain[min(n, self.T)]


@dataclass(frozen=True)
class HopfCoradicalResult:
    subspace: Subspace
    m: int
    partial_dims: tuple[int, ...]


def dual_algebra(c) -> AlgebraData:
    return AlgebraData(c.field, c.dim, tuple(n + "*" for n in c.names), c.dual_mult(), c.counit)


@memo
def _dual_alg_cached(c) -> AlgebraData:
    return dual_algebra(c)


@memo
def _dual_radical(c) -> Subspace:
    return jacobson_radical(_dual_alg_cached(c))


def product_span(a, U: Subspace, V: Subspace) -> Subspace:
    """span{u v : u in U, v in V} using the algebra ``a``."""
    F, d = a.field, a.dim
    red = RowReducer(F, d)
    for u in U.basis:
        for v in V.basis:
            red.add(to_sparse(F, a.product(u, v)))
            if len(red) == d:
                return Subspace.full(F, d)
    return Subspace.span(F, d, red.rows())


@memo
def coradical(c) -> Subspace:
    """Annihilator of the radical of the dual algebra; checked to be a subcoalgebra."""
    H0 = _dual_radical(c).annihilator()
    for v in H0.basis:
        if not in_tensor_product(H0, H0, c.coproduct(v)):
            raise CrossCheckError("coradical is not a subcoalgebra")
    return H0


def wedge(c, D: Subspace, E: Subspace, cross_check: bool = False) -> Subspace:
    """D wedge E computed as (D-perp E-perp)-perp in the dual algebra."""
    A = _dual_alg_cached(c)
    W = product_span(A, D.annihilator(), E.annihilator()).annihilator()
    if cross_check:
        K = wedge_kernel(c, D, E)
        if K != W:
            raise CrossCheckError("wedge: dual route and kernel route disagree")
    return W


def wedge_kernel(c, D: Subspace, E: Subspace) -> Subspace:
    """{x : Delta x in D (x) C + C (x) E}, solved in the d^2-dimensional space."""
    F, d = c.field, c.dim
    vecs = []
    for u in D.basis:
        for j in range(d):
            v = [F.zero] * (d * d)
            for i, a in enumerate(u):
                if a != F.zero:
                    v[i * d + j] = a
            vecs.append(v)
    for w in E.basis:
        for j in range(d):
            v = [F.zero] * (d * d)
            for i, a in enumerate(w):
                if a != F.zero:
                    v[j * d + i] = a
            vecs.append(v)
    W = Subspace.span(F, d * d, vecs)
    delta = [[F.zero] * (d * d) for _ in range(d)]
    for i in range(d):
        for j, k, a in c.comult[i]:
            delta[i][j * d + k] = a
    return preimage(F, delta, d * d, W)


@memo
def coradical_filtration(c) -> Filtration:
    """H_n = H_{n-1} wedge H_0 until the whole coalgebra is reached."""
    H0 = coradical(c)
    chain = [H0]
    while not chain[-1].is_full():
        nxt = wedge(c, chain[-1], H0)
        if nxt == chain[-1]:
            raise FiltrationError("coradical filtration stalled before exhausting the coalgebra")
        chain.append(nxt)
    return Filtration(tuple(chain))


def coradical_filtration_via_radical(c) -> Filtration:
    """H_n = (J^{n+1})-perp with J the radical of the dual algebra."""
    A = _dual_alg_cached(c)
    J = _dual_radical(c)
    power = J
    chain = [power.annihilator()]
    while power.dim:
        power = product_span(A, power, J)
        chain.append(power.annihilator())
    return Filtration(tuple(chain))


def subspace_product(h, D: Subspace, E: Subspace) -> Subspace:
    return product_span(h, D, E)


def subalgebra_generated(h, D: Subspace) -> HopfCoradicalResult:
    """Sum of the powers D^(r) (D^(0) = k1) until one more factor adds nothing."""
    F, d = h.field, h.dim
    acc = Subspace.span(F, d, [h.unit])
    power = acc
    dims = [acc.dim]
    r = 0
    while True:
        r += 1
        power = product_span(h, power, D)
        nxt = acc.sum(power)
        if nxt == acc:
            return HopfCoradicalResult(acc, r - 1, tuple(dims))
        acc = nxt
        dims.append(acc.dim)


def antipode_image(h: HopfAlgebra, U: Subspace) -> Subspace:
    return U.image_under(h.antipode, h.dim)


class AntipodeInstabilityError(ValueError):
    pass


@memo
def hopf_coradical(h: HopfAlgebra) -> HopfCoradicalResult:
    H0 = coradical(h)
    if not H0.contains_subspace(antipode_image(h, H0)):
        raise AntipodeInstabilityError("the antipode does not preserve the coradical")
    res = subalgebra_generated(h, H0)
    V = res.subspace
    for v in V.basis:
        if not in_tensor_product(V, V, h.coproduct(v)):
            raise CrossCheckError("Hopf coradical is not a subcoalgebra")
    if not V.contains_subspace(antipode_image(h, V)):
        raise CrossCheckError("Hopf coradical is not antipode-stable")
    return res


@memo
def standard_filtration(h: HopfAlgebra) -> Filtration:
    base = hopf_coradical(h).subspace
    chain = [base]
    while not chain[-1].is_full():
        nxt = wedge(h, chain[-1], base)
        if nxt == chain[-1]:
            raise FiltrationError("standard filtration stalled")
        chain.append(nxt)
    return Filtration(tuple(chain))


# -- adapted bases -------------------------------------------------------------

@dataclass(frozen=True)
class AdaptedBasis:
    """Basis b_0..b_{d-1} listing graded complements of a filtration in order."""

    rows: tuple[tuple, ...]
    degrees: tuple[int, ...]
    inverse: tuple[tuple, ...]
    is_identity: bool

    def coords(self, F, v) -> tuple:
        if self.is_identity:
            return tuple(v)
        return mat_mul(F, [v], self.inverse)[0]

    def tensor_coords(self, F, t: dict) -> dict:
        if self.is_identity:
            return dict(t)
        inv = self.inverse
        z = F.zero
        half: dict = {}
        for (j, k), c in t.items():
            for p, x in enumerate(inv[j]):
                if x != z:
                    key = (p, k)
                    half[key] = F.add(half.get(key, z), F.mul(c, x))
        out: dict = {}
        for (p, k), c in half.items():
            if c == z:
                continue
            for q, x in enumerate(inv[k]):
                if x != z:
                    key = (p, q)
                    out[key] = F.add(out.get(key, z), F.mul(c, x))
        return {k: v for k, v in out.items() if v != z}


def adapted_basis(F, filt: Filtration) -> AdaptedBasis:
    rows: list = []
    degs: list = []
    prev: set = set()
    for n, S in enumerate(filt.chain):
        for row, p in zip(S.basis, S.pivots):
            if p not in prev:
                rows.append(row)
                degs.append(n)
        prev = set(S.pivots)
    d = len(rows)
    ident = all(r == unit_vector(F, d, i) for i, r in enumerate(rows))
    inv = tuple(unit_vector(F, d, i) for i in range(d)) if ident else inverse_rows(F, rows)
    return AdaptedBasis(tuple(rows), tuple(degs), inv, ident)


def verify_hopf_filtration(h: HopfAlgebra, filt: Filtration) -> list[str]:
    """Failures of the Hopf algebra filtration axioms, each tagged with n."""
    F, d = h.field, h.dim
    out = []
    if not filt.chain[-1].is_full():
        out.append("filtration does not exhaust the space")
        return out
    for n in range(1, len(filt.chain)):
        if not filt.chain[n].contains_subspace(filt.chain[n - 1]):
            out.append(f"filtration is not increasing at n={n}")
            return out
    if not filt.chain[0].contains(h.unit):
        out.append("unit not in degree 0 (n=0)")
    B = adapted_basis(F, filt)
    deg = B.degrees
    bad_delta: dict = {}
    for a in range(d):
        t = B.tensor_coords(F, h.coproduct(B.rows[a]))
        if any(deg[p] + deg[q] > deg[a] for (p, q) in t):
            bad_delta.setdefault(deg[a], []).append(a)
    for n in sorted(bad_delta):
        out.append(f"Delta-compatibility fails at n={n}")
    bad_mult: set = set()
    for a in range(d):
        for b in range(d):
            c = B.coords(F, h.product(B.rows[a], B.rows[b]))
            if any(x != F.zero and deg[k] > deg[a] + deg[b] for k, x in enumerate(c)):
                bad_mult.add((deg[a], deg[b]))
    for n, m in sorted(bad_mult):
        out.append(f"multiplicativity fails at (n,m)=({n},{m})")
    for n, S in enumerate(filt.chain):
        if antipode_image(h, S) != S:
            out.append(f"antipode does not preserve the term n={n}")
    return out


# -- checks on the standard filtration ---------------------------------------------

def standard_filtration_checks(h: HopfAlgebra) -> dict:
    """Hopf coradical is a Hopf subalgebra with the same coradical, H_n in H_[n],
    the standard filtration is a Hopf filtration with antipode-stable terms."""
    res = hopf_coradical(h)
    H00 = res.subspace
    H0 = coradical(h)
    sub = restrict_hopf(h, H00)
    sub_cor = coradical(sub)
    # map the coradical of the restriction back into h
    back = Subspace.span(h.field, h.dim, mat_mul(h.field, sub_cor.basis, H00.basis) if sub_cor.basis else [])
    cor = coradical_filtration(h)
    std = standard_filtration(h)
    contain = all(std.term(n).contains_subspace(cor.term(n)) for n in range(max(cor.T, std.T) + 1))
    failures = verify_hopf_filtration(h, std)
    stable = all(antipode_image(h, S) == S for S in std.chain)
    return {
        "hopf_coradical_dim": H00.dim,
        "m": res.m,
        "coradical_of_hopf_coradical_ok": back == H0,
        "coradical_filtration_inside_standard": contain,
        "filtration_failures": failures,
        "antipode_stable": stable,
        "ok": back == H0 and contain and not failures and stable,
    }


# -- J_omega ---------------------------------------------------------------------

def _ideal_core(h, V: Subspace) -> Subspace:
    """Largest two-sided ideal contained in V."""
    F, d = h.field, h.dim
    while True:
        W = V
        for i in range(d):
            e = unit_vector(F, d, i)
            W = W.intersect(preimage(F, h.left_mult_rows(e), d, V))
            W = W.intersect(preimage(F, h.right_mult_rows(e), d, V))
        if W == V:
            return V
        V = W


@memo
def j_omega(h: HopfAlgebra, cross_check: bool = True) -> Subspace:
    """Largest Hopf ideal inside the Jacobson radical (greatest fixed point)."""
    F, d = h.field, h.dim
    I = jacobson_radical(h)
    counit_ker = Subspace.span(F, d, [h.counit]).annihilator()
    while True:
        nxt = I.intersect(wedge(h, I, I))
        nxt = nxt.intersect(preimage(F, h.antipode, d, I))
        nxt = nxt.intersect(counit_ker)
        nxt = _ideal_core(h, nxt)
        if nxt == I:
            break
        I = nxt
    if cross_check:
        other = hopf_coradical(dual(h)).subspace.annihilator()
        if other != I:
            raise CrossCheckError("J_omega: fixed point and dual Hopf coradical disagree")
    return I


def gr_dual_compat(h: HopfAlgebra) -> dict:
    """Powers of J_omega against the standard filtration of the dual."""
    F, d = h.field, h.dim
    Jw = j_omega(h)
    powers = [Subspace.full(F, d)]
    while powers[-1].dim:
        nxt = product_span(h, powers[-1], Jw)
        if nxt == powers[-1]:
            break
        powers.append(nxt)
    std = standard_filtration(dual(h))
    n_terms = max(len(powers) - 1, len(std.chain))
    perp_match = all(
        (powers[n + 1] if n + 1 < len(powers) else powers[-1]).annihilator() == std.term(n)
        for n in range(n_terms)
    )
    layers_j = tuple(powers[n].dim - powers[n + 1].dim for n in range(len(powers) - 1))
    layers_d = std.layer_dims()
    ranks = []
    nondeg = True
    for n in range(min(len(layers_j), len(layers_d))):
        lift_x, _ = quotient_basis(powers[n], powers[n + 1])
        lower = std.chain[n - 1] if n else Subspace.zero(F, d)
        lift_f, _ = quotient_basis(std.chain[n], lower)
        pairing = mat_mul(F, lift_f.rows, tuple(zip(*lift_x.rows))) if lift_x.rows and lift_f.rows else ()
        r = rank(F, pairing, lift_x.nrows) if pairing else 0
        ranks.append(r)
        if not (lift_x.nrows == lift_f.nrows == r):
            nondeg = False
    ok = perp_match and layers_j == layers_d and nondeg
    return {
        "jomega_dim": Jw.dim,
        "jomega_power_dims": tuple(p.dim for p in powers),
        "dual_standard_dims": std.dims,
        "layer_dims_jomega": layers_j,
        "layer_dims_dual": layers_d,
        "pairing_ranks": tuple(ranks),
        "perp_match": perp_match,
        "ok": ok,
    }
