import json
from fractions import Fraction
from pathlib import Path

import pytest

from hopflab.cofrob import (
    Comodule,
    ComoduleError,
    DecompositionError,
    build_exact_sequence,
    check_exseq_theorems,
    comodule_violations,
    cotensor,
    endomorphism_algebra,
    hom_space,
    hull_of_unit,
    indecomposable_decomposition,
    injective_hull,
    injective_implies_projective_check,
    integral_checks,
    is_cosemisimple,
    is_local,
    is_simple,
    left_integrals,
    lemma_maximal_subcomodule,
    primitive_idempotents,
    projectivity_certificate,
    pushforward,
    regular,
    restrict,
    right_integrals,
    simple_decomposition,
    socle,
    socle_report,
    trivial,
    check_radford,
)
from hopflab.cofrob.comodules import quotient, radical
from hopflab.cofrob.idempotents import check_idempotents
from hopflab.cofrob.theorems import cotensor_coinvariants, cotensor_equalizer, regular_summands
from hopflab.corpus_io.builders import _qc, bundled_exact_sequences, comatrix, cyclic_table, group_algebra, tensor_hopf
from hopflab.exactla import Cyclotomic, Subspace
from hopflab.structures import dual, jacobson_radical

import oracles

FIXTURES = Path(__file__).parent / "fixtures"


def span(h, *names):
    return Subspace.span(h.field, h.dim, [h.basis(h.index(n)) for n in names])


def _fr(x):
    return Fraction(int(x.numerator), int(x.denominator))


# -- integrals ----------------------------------------------------------------

def test_h4_integral_oracle_reproduces_frozen_fixture():
    fx = json.loads((FIXTURES / "h4_integral.json").read_text())
    left = oracles.integral_space(oracles.H4_COMULT, oracles.H4_UNIT, 4, left=True)
    right = oracles.integral_space(oracles.H4_COMULT, oracles.H4_UNIT, 4, left=False)
    assert len(left) == len(right) == 1
    assert left[0] == [Fraction(x) for x in fx["left_integral"]]
    assert right[0] == [Fraction(x) for x in fx["right_integral"]]
    g = oracles.distinguished_grouplike(oracles.H4_COMULT, left[0], 4)
    assert g == [Fraction(x) for x in fx["distinguished_grouplike"]]


def test_h4_integrals_match_fixture(h4):
    fx = json.loads((FIXTURES / "h4_integral.json").read_text())
    assert list(h4.names) == fx["basis"]
    F = h4.field
    L, R = left_integrals(h4), right_integrals(h4)
    assert [F.to_text(x) for x in L.integral] == fx["left_integral"]
    assert [F.to_text(x) for x in R.integral] == fx["right_integral"]
    assert [F.to_text(x) for x in L.grouplike] == fx["distinguished_grouplike"]


def _same_line(u, v):
    k = next(i for i, x in enumerate(v) if x != 0)
    if u[k] == 0:
        return False
    r = u[k] / v[k]
    return all(a == r * b for a, b in zip(u, v))


@pytest.mark.parametrize("name", ["QC2", "QC3", "QS3", "QS3_dual", "H4", "H4xQC3"])
def test_integrals_agree_with_linear_solve_oracle(corpus, name):
    h = corpus[name]
    comult = {i: [(j, k, _fr(c)) for j, k, c in h.comult[i]] for i in range(h.dim)}
    unit = [_fr(x) for x in h.unit]
    for left, data in ((True, left_integrals(h)), (False, right_integrals(h))):
        sols = oracles.integral_space(comult, unit, h.dim, left=left)
        assert len(sols) == 1
        assert _same_line(sols[0], [_fr(x) for x in data.integral])


def test_group_algebra_integral_is_identity_coefficient(corpus):
    h = corpus["QC2"]
    F = h.field
    e = h.index("1") if "1" in h.names else 0
    for data in (left_integrals(h), right_integrals(h)):
        assert [i for i, x in enumerate(data.integral) if x != F.zero] == [e]
    assert left_integrals(h).grouplike == h.unit


def test_t3_distinguished_grouplike_is_power_of_g(t3):
    g = left_integrals(t3).grouplike
    nz = [i for i, x in enumerate(g) if x != t3.field.zero]
    assert len(nz) == 1 and t3.names[nz[0]] in ("1", "g", "g^2")
    assert g[nz[0]] == t3.field.one


def test_integral_checks_on_corpus(corpus):
    for name, h in corpus.items():
        rep = integral_checks(h)
        assert all(rep.values()), (name, rep)


def test_cosemisimplicity(corpus):
    assert is_cosemisimple(corpus["QS3"])
    assert not is_cosemisimple(corpus["H4"])
    assert not is_cosemisimple(corpus["T3"])
    # group-likes span GF(2)C2, so it is cosemisimple as a coalgebra; its dual is not
    assert is_cosemisimple(corpus["GF2C2"])
    assert not is_cosemisimple(corpus["GF2C2_dual"])


# -- comodules ----------------------------------------------------------------

def test_regular_and_trivial_comodules_are_valid(corpus):
    for name in ("H4", "T3", "QS3_dual"):
        h = corpus[name]
        for side in ("left", "right"):
            assert comodule_violations(regular(h, side)) == []
            assert comodule_violations(trivial(h, side, 2)) == []


def test_broken_coaction_is_reported(h4):
    M = regular(h4, "left")
    bad = Comodule(h4, M.dim, (M.coaction[1],) + M.coaction[1:], "left")
    assert comodule_violations(bad)


def test_socle_examples(corpus, h4, uq_dual):
    qc2 = corpus["QC2"]
    assert [S.dim for S in simple_decomposition(regular(qc2))] == [1, 1]
    assert socle(regular(h4, "left")) == span(h4, "1", "g")
    assert set(simple_decomposition(regular(h4, "left"))) == {span(h4, "1"), span(h4, "g")}
    rep = socle_report(uq_dual)
    assert rep["iso_class_dims"] == [1, 2, 3]
    assert rep["socle_is_coradical"]


def test_socle_matches_coradical_everywhere(corpus):
    for name, h in corpus.items():
        assert socle_report(h)["socle_is_coradical"], name


@pytest.mark.parametrize("name,dims", [("H4", [2, 2]), ("T3", [3, 3, 3]), ("QS3", [1] * 6)])
def test_indecomposable_decomposition(corpus, name, dims):
    h = corpus[name]
    M = regular(h, "left")
    parts = indecomposable_decomposition(M)
    assert sorted(P.dim for P in parts) == dims
    assert all(is_local(restrict(M, P)) for P in parts)
    total = parts[0]
    for P in parts[1:]:
        total = total + P
    assert total.is_full()


def test_uq_dual_decomposition(uq_dual):
    assert sorted(P.dim for P in regular_summands(uq_dual, "left")) == [3, 3, 3, 6, 6, 6]


def test_semisimple_decomposition_is_simple(corpus):
    h = corpus["QS3_dual"]
    M = regular(h, "left")
    assert all(is_simple(restrict(M, P)) for P in indecomposable_decomposition(M))


def test_hom_from_trivial_into_h4(h4):
    k = trivial(h4, "left")
    assert len(hom_space(k, regular(h4, "left"))) == 1


def test_endomorphism_algebra_of_regular(h4):
    E = endomorphism_algebra(regular(h4, "left"))
    assert E.algebra.dim == 4


# -- idempotents --------------------------------------------------------------

def test_primitive_idempotents_of_matrix_algebra():
    A = dual(comatrix(2))
    idems = primitive_idempotents(A, jacobson_radical(A))
    assert len(idems) == 2
    assert check_idempotents(A, idems) == []


def test_primitive_idempotents_of_split_group_algebra():
    F = Cyclotomic(3)
    A = group_algebra(*cyclic_table(3), F)
    idems = primitive_idempotents(A, jacobson_radical(A))
    assert len(idems) == 3
    assert check_idempotents(A, idems) == []


def test_non_split_algebra_is_refused():
    A = _qc(3)  # Q x Q(zeta_3): not split over Q
    with pytest.raises(DecompositionError):
        primitive_idempotents(A, jacobson_radical(A))


def test_primitive_idempotents_of_h4_dual(h4):
    A = dual(h4)
    idems = primitive_idempotents(A, jacobson_radical(A))
    assert len(idems) == 2
    assert check_idempotents(A, idems) == []


# -- hulls, Radford, maximal subcomodule -----------------------------------------

def test_hull_in_cosemisimple_member(corpus):
    h = corpus["QS3"]
    assert hull_of_unit(h).subspace == Subspace.span(h.field, h.dim, [h.unit])


def test_hull_examples(h4, t3):
    assert hull_of_unit(h4, "left").subspace == span(h4, "1", "x")
    assert hull_of_unit(h4, "right").subspace == span(h4, "1", "gx")
    assert hull_of_unit(t3, "left").dim == 3
    E = injective_hull(h4, span(h4, "g"), "left")
    assert E.dim == 2 and E.subspace.contains(h4.basis(h4.index("g")))


def test_hull_rejects_non_simple(h4):
    with pytest.raises(ComoduleError):
        injective_hull(h4, span(h4, "1", "g"), "left")


def test_uq_dual_hull_not_inside_one_summand(uq_dual):
    E = hull_of_unit(uq_dual, "left")
    assert E.dim == 6


@pytest.mark.parametrize("name", ["QS3", "H4", "T3", "uqsl2_3_dual"])
def test_radford_product(corpus, name):
    rep = check_radford(corpus[name])
    assert rep["ok"] and rep["product_dim"] == corpus[name].dim


@pytest.mark.parametrize("name,mdim", [("QS3", 0), ("H4", 1), ("T3", 2)])
def test_maximal_subcomodule(corpus, name, mdim):
    rep = lemma_maximal_subcomodule(corpus[name])
    assert rep["ok"], rep
    assert rep["radical_dim"] == mdim
    assert rep["quotient_dim"] == 1


def test_quotient_comodule(h4):
    M = regular(h4, "left")
    Q, lift, proj = quotient(M, span(h4, "1", "g"))
    assert Q.dim == 2
    assert comodule_violations(Q) == []
    assert radical(M).dim == 2


# -- projectivity -------------------------------------------------------------

@pytest.mark.parametrize("name", ["QS3", "H4", "T3"])
def test_injective_implies_projective(corpus, name):
    rep = injective_implies_projective_check(corpus[name])
    assert rep["ok"], rep


def test_trivial_comodule_of_h4_is_not_projective(h4):
    assert not projectivity_certificate(trivial(h4, "left"))
    assert projectivity_certificate(trivial(_qc(2), "left"))


# -- cotensor -----------------------------------------------------------------

def test_cotensor_units(h4, t3):
    for h in (h4, t3):
        X = restrict(regular(h, "left"), hull_of_unit(h, "left").subspace)
        assert cotensor(regular(h, "right"), X).dim == X.dim
        assert cotensor(trivial(h, "right"), regular(h, "left")).dim == 1


def test_cotensor_two_constructions_agree(h4):
    M, X = regular(h4, "right"), regular(h4, "left")
    assert cotensor_equalizer(M, X) == cotensor_coinvariants(M, X)


def test_cotensor_recovers_subalgebra(h4):
    c3 = _qc(3)
    B = tensor_hopf(h4, c3)
    F = B.field
    pi = [tuple(F.mul(h4.counit[i], F.one if j == k else F.zero) for k in range(3))
          for i in range(4) for j in range(3)]
    M = pushforward(regular(B, "right"), pi, c3)
    assert comodule_violations(M) == []
    assert cotensor(M, trivial(c3, "left")).dim == 4


def test_cotensor_rejects_wrong_sides(h4):
    with pytest.raises(ComoduleError):
        cotensor(regular(h4, "left"), regular(h4, "left"))


# -- exact sequences ----------------------------------------------------------

EXPECTED = {
    "k_in_H4": ((1, 4, 4), False, False),
    "QA3_in_QS3": ((3, 6, 2), True, True),
    "H4_in_H4xQC3": ((4, 12, 3), True, False),
}


@pytest.mark.parametrize("name,A,B,iota", bundled_exact_sequences(), ids=lambda x: x if isinstance(x, str) else "")
def test_bundled_exact_sequences(name, A, B, iota):
    seq = build_exact_sequence(A, B, iota)
    rep = check_exseq_theorems(seq)
    dims, restricts, b_cosemisimple = EXPECTED[name]
    assert rep["dims"] == dims
    assert rep["integral_restriction"]["integral_restricts_nonzero"] is restricts
    assert rep["cosemisimplicity"]["B_cosemisimple"] is b_cosemisimple
    assert rep["ok"] and rep["co_frobenius"] == "degenerate"


def test_quotient_of_s3_by_a3_is_group_algebra_of_c2():
    _, A, B, iota = bundled_exact_sequences()[1]
    C = build_exact_sequence(A, B, iota).C
    assert C.dim == 2 and is_cosemisimple(C)
    grouplikes = [i for i in range(2) if C.coproduct(C.basis(i)) == {(i, i): C.field.one}]
    assert len(grouplikes) == 2


def test_non_normal_subalgebra_is_rejected():
    from hopflab.cofrob import ExactSequenceError
    from hopflab.corpus_io.builders import symmetric_group
    from hopflab.structures import restrict_hopf

    table, names = symmetric_group(3)
    B = group_algebra(table, names)
    # {e, (01)}: a transposition subgroup is not normal
    e = names.index(names[0])
    t = next(i for i in range(6) if i != e and table[i][i] == e)
    U = Subspace.span(B.field, 6, [B.basis(e), B.basis(t)])
    with pytest.raises(ExactSequenceError):
        build_exact_sequence(restrict_hopf(B, U), B, U.basis)
