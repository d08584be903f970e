import pytest

from hopflab.corpus_io.builders import _qc, sweedler4, tensor_hopf
from hopflab.exactla import Subspace, rank
from hopflab.exactla.linalg import identity, mat_mul
from hopflab.graded import (
    braided_antipode,
    bosonization,
    check_graded_standard_filtration,
    coinvariants,
    diagram,
    diagram_violations,
    gr_standard,
    homogeneous_projection,
    verify_bosonization_iso,
    yd_structure,
    yd_violations,
)
from hopflab.structures import validate
from hopflab.structures.filtrations import hopf_coradical


def test_cosemisimple_gr_is_single_layer(corpus):
    G = gr_standard(corpus["QS3"])
    assert G.layer_dims == (6,)
    assert homogeneous_projection(G) == identity(G.hopf.field, 6)


@pytest.mark.parametrize("name,layers", [("H4", (2, 2)), ("T3", (3, 3, 3))])
def test_gr_of_pointed_members_keeps_structure_constants(corpus, name, layers):
    h = corpus[name]
    G = gr_standard(h)
    assert G.layer_dims == layers
    assert (G.hopf.mult, G.hopf.comult, G.hopf.antipode) == (h.mult, h.comult, h.antipode)


@pytest.mark.parametrize("name,r", [("H4", 2), ("T3", 3)])
def test_homogeneous_projection_is_idempotent(corpus, name, r):
    G = gr_standard(corpus[name])
    P = homogeneous_projection(G)
    F = G.hopf.field
    assert mat_mul(F, P, P) == P
    assert rank(F, P, G.hopf.dim) == r


def test_coinvariants_of_identity_is_unit_line(h4):
    co = coinvariants(h4, identity(h4.field, 4))
    assert co == Subspace.span(h4.field, 4, [h4.unit])


def test_coinvariants_of_tensor_projection(h4):
    c3 = _qc(3)
    B = tensor_hopf(h4, c3)
    F = B.field
    pi = [tuple(F.mul(h4.counit[i], F.one if j == k else F.zero) for k in range(3))
          for i in range(4) for j in range(3)]
    co = coinvariants(B, pi)
    A1 = Subspace.span(F, B.dim, [tuple(F.one if (b // 3 == i and b % 3 == 0) else F.zero for b in range(12))
                                  for i in range(4)])
    assert co == A1


def test_coinvariants_of_gr_h4(h4):
    G = gr_standard(h4)
    R = coinvariants(G.hopf, homogeneous_projection(G))
    assert R.dim == 2
    assert R.contains(G.hopf.unit)
    assert R.contains(G.hopf.basis(G.hopf.index("x")))


@pytest.mark.parametrize("name,layers", [("QS3", (1,)), ("H4", (1, 1)), ("T3", (1, 1, 1)), ("T4", (1, 1, 1, 1))])
def test_diagram_layer_dims(corpus, name, layers):
    D = diagram(corpus[name])
    assert D.layer_dims == layers
    assert diagram_violations(D) == []


def test_braided_antipode_exists(corpus):
    for name in ("H4", "T3", "uqsl2_3_dual"):
        D = diagram(corpus[name])
        S = braided_antipode(D)
        assert len(S) == D.dim


def test_yd_structure_h4(h4):
    G = gr_standard(h4)
    D = diagram(h4)
    yd = yd_structure(G, D)
    assert yd_violations(yd) == []
    F = h4.field
    g = yd.L.names.index("g")
    xbar = D.degrees.index(1)
    assert yd.action[g][xbar] == tuple(F.neg(F.one) if b == xbar else F.zero for b in range(2))
    assert yd.coaction[xbar] == ((g, xbar, F.one),)


def test_yd_action_on_t3_is_adjoint(t3):
    """g . xbar must equal g x g^-1 computed directly in gr T3."""
    G = gr_standard(t3)
    D = diagram(t3)
    yd = yd_structure(G, D)
    H, F = G.hopf, t3.field
    g_vec, x_vec = H.basis(H.index("g")), H.basis(H.index("x"))
    ginv = H.apply_antipode(g_vec)
    adj = H.product(H.product(g_vec, x_vec), ginv)
    coeff = adj[H.index("x")]
    assert adj == tuple(F.mul(coeff, c) for c in x_vec)
    a = D.degrees.index(1)
    assert yd.action[yd.L.names.index("g")][a][a] == coeff
    assert coeff == F.mul(F.zeta, F.zeta)


def test_bosonization_trivial_diagram_is_L(corpus):
    h = corpus["QC3"]
    G = gr_standard(h)
    D = diagram(h)
    yd = yd_structure(G, D)
    assert bosonization(D, yd.L, yd) is yd.L


@pytest.mark.parametrize("name,dim", [("H4", 4), ("T3", 9)])
def test_bosonization_dimensions(corpus, name, dim):
    h = corpus[name]
    G = gr_standard(h)
    D = diagram(h)
    yd = yd_structure(G, D)
    B = bosonization(D, yd.L, yd)
    assert B.dim == dim
    assert validate(B) == []


def test_bosonization_iso_on_every_member(corpus):
    for name, h in corpus.items():
        rep = verify_bosonization_iso(gr_standard(h))
        assert rep["ok"], (name, rep)
        assert rep["bijective"]


def test_graded_standard_filtration_every_member(corpus):
    for name, h in corpus.items():
        rep = check_graded_standard_filtration(gr_standard(h))
        assert rep["ok"], (name, rep)


def test_dimension_count(corpus):
    for name, h in corpus.items():
        assert gr_standard(h).hopf.dim == diagram(h).dim * hopf_coradical(h).subspace.dim, name


def test_sweedler_gr_is_itself():
    h = sweedler4()
    G = gr_standard(h)
    assert validate(G.hopf) == []
    assert G.source_basis == identity(h.field, 4)


def test_yd_compatibility_failure_is_detected(h4):
    import dataclasses

    G = gr_standard(h4)
    D = diagram(h4)
    yd = yd_structure(G, D)
    F = yd.L.field
    one, zero = F.one, F.zero
    ident = ((one, zero), (zero, one))
    swap = ((zero, one), (one, zero))
    # g swaps the two homogeneous pieces, which moves degrees around
    action = tuple(ident if yd.L.names[x] == "1" else swap for x in range(yd.L.dim))
    bad = dataclasses.replace(yd, action=action)
    assert any("Yetter-Drinfeld" in line for line in yd_violations(bad))
