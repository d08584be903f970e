import dataclasses
import json

import pytest

from hopflab.corpus_io.builders import (
    BUILDER_NAMES,
    InvalidParameters,
    build,
    check_group_table,
    coalgebra_with_S,
    group_algebra,
    sweedler4,
    taft,
    uqsl2,
    uqsl2_dual,
)
from hopflab.corpus_io.format import (
    FormatError,
    parse,
    parse_hopf,
    parse_map,
    parse_yd,
    serialize,
    serialize_map,
    serialize_yd,
    sha256_text,
)
from hopflab.corpus_io.suite import SuiteAbort, report_failed, report_text, run_suite
from hopflab.exactla import QQ, Cyclotomic, PrimeField
from hopflab.exactla.linalg import identity, mat_mul
from hopflab.nichols import degree_one_yd, zeta_yd
from hopflab.structures import anti_coalgebra_violations, dual, validate


# -- builders -----------------------------------------------------------------

def test_taft2_over_q_is_sweedler():
    t, s = taft(2), sweedler4()
    assert t.field == QQ
    assert (t.mult, t.comult, t.unit, t.counit, t.antipode) == (s.mult, s.comult, s.unit, s.counit, s.antipode)


def test_taft_default_fields():
    assert taft(3).field == Cyclotomic(3)
    assert taft(4).field == Cyclotomic(4)


def test_uqsl2_dual_is_dual():
    u, ud = uqsl2(3), uqsl2_dual(3)
    assert ud.dim == 27 and ud.field == Cyclotomic(3)
    assert ud == dual(u)


def test_builds_are_deterministic():
    for name in BUILDER_NAMES:
        if name in ("uqsl2", "uqsl2_dual"):
            continue
        a, b = build(name), build(name)
        assert a == b, name


@pytest.mark.parametrize("name", [n for n in BUILDER_NAMES if n not in ("comatrix", "coalgebra_with_S")])
def test_builders_validate(name):
    assert validate(build(name)) == []


def test_group_table_must_be_a_group():
    with pytest.raises(InvalidParameters):
        check_group_table([[0, 1], [0, 1]])
    with pytest.raises(InvalidParameters):
        group_algebra([[1, 0], [0, 1]] + [[0, 0]])


def test_invalid_parameters():
    with pytest.raises(InvalidParameters):
        build("no_such_member")
    with pytest.raises(InvalidParameters):
        coalgebra_with_S([[[1, 1], [1, 1]]], [2])
    with pytest.raises(InvalidParameters):
        coalgebra_with_S([[[0, 1], [1, 0]]], [0])


def test_coalgebra_with_s_example():
    C, S = coalgebra_with_S([[[0, 1], [1, 0]]], [2])
    assert C.dim == 8
    assert validate(C) == []
    assert anti_coalgebra_violations(C, S) == []
    F = C.field
    S2 = mat_mul(F, S, S)
    assert S2 != identity(F, 8)
    assert mat_mul(F, S2, S2) == identity(F, 8)


def test_coalgebra_with_s_several_blocks():
    C, S = coalgebra_with_S([[[1, 1], [0, 1]], [[2]]], [2, 3])
    assert C.dim == 2 * 4 + 3 * 1
    assert anti_coalgebra_violations(C, S) == []


# -- file formats -------------------------------------------------------------

def test_corpus_round_trip_is_byte_identical(corpus):
    for name, h in corpus.items():
        text = serialize(h)
        again = serialize(parse_hopf(text))
        assert again == text, name
        assert parse_hopf(text) == h


def test_coalgebra_round_trip():
    C, S = coalgebra_with_S([[[0, 1], [1, 0]]], [2])
    text = serialize(C, S)
    C2, S2 = parse(text)
    assert (C2, S2) == (C, S)
    assert serialize(C2, S2) == text


def test_one_key_per_line(h4):
    lines = serialize(h4).splitlines()
    assert lines[0] == "{" and lines[-1] == "}"
    keys = [json.loads("{" + ln.rstrip(",") + "}") for ln in lines[1:-1]]
    assert [next(iter(k)) for k in keys][:3] == ["format_version", "kind", "field"]


def test_map_round_trip():
    F = PrimeField(5)
    M = ((1, 0, 3), (0, 0, 4))
    text = serialize_map(F, M)
    assert parse_map(text) == (F, M)
    assert serialize_map(*parse_map(text)) == text


def test_yd_round_trip(t3):
    for yd in (zeta_yd(3), degree_one_yd(t3)):
        text = serialize_yd(yd)
        back = parse_yd(text)
        assert back == yd
        assert serialize_yd(back) == text


@pytest.mark.parametrize("mangle,msg", [
    (lambda d: "not json", "JSON"),
    (lambda d: json.dumps([1, 2]), "object"),
    (lambda d: json.dumps({**d, "format_version": "hopf-sc v0"}), "format_version"),
    (lambda d: json.dumps({k: v for k, v in d.items() if k != "counit"}), "counit"),
    (lambda d: json.dumps({**d, "dim": 0}), "dim"),
    (lambda d: json.dumps({**d, "names": ["a", "a", "b", "c"]}), "names"),
    (lambda d: json.dumps({**d, "mult": [[0, 0, 9, "1"]]}), "range"),
    (lambda d: json.dumps({**d, "mult": [[0, 0, 0]]}), "mult"),
    (lambda d: json.dumps({**d, "unit": ["1", "0"]}), "unit"),
    (lambda d: json.dumps({**d, "field": {"kind": "GF", "p": 4}}), "field"),
    (lambda d: json.dumps({**d, "kind": "bialgebra"}), "kind"),
    (lambda d: json.dumps({**d, "counit": ["x", "1", "0", "0"]}), None),
])
def test_malformed_documents_raise_format_error(h4, mangle, msg):
    doc = json.loads(serialize(h4))
    with pytest.raises(FormatError, match=msg):
        parse(mangle(doc))


def test_sha256_is_stable(h4):
    assert sha256_text(serialize(h4)) == sha256_text(serialize(sweedler4()))


# -- suite runner -------------------------------------------------------------

def _statuses(report):
    return {c["name"]: c["status"] for c in report["checks"]}


def test_sweedler_full_suite():
    rep = run_suite(sweedler4(), "all", "H4")
    assert not report_failed(rep)
    assert set(_statuses(rep).values()) <= {"pass", "degenerate"}
    assert _statuses(rep)["co_frobenius_biconditional"] == "degenerate"
    assert _statuses(rep)["finite_generation"] == "degenerate"


def test_qs3_full_suite(corpus):
    rep = run_suite(corpus["QS3"], "all", "QS3")
    assert rep["summary"]["fail"] == 0
    data = {c["name"]: c["data"] for c in rep["checks"]}
    assert data["cosemisimple"]["value"] is True


def test_uq_dual_standard_and_graded(uq_dual):
    for suite in ("standard", "graded"):
        rep = run_suite(uq_dual, suite, "uqsl2_3_dual")
        assert rep["summary"]["fail"] == 0
    data = {c["name"]: c["data"] for c in run_suite(uq_dual, "standard")["checks"]}
    assert data["hopf_coradical"]["coradical_is_subalgebra"] is False


def test_report_is_deterministic():
    a = report_text(run_suite(sweedler4(), "all", "H4", "abc"))
    b = report_text(run_suite(sweedler4(), "all", "H4", "abc"))
    assert a == b
    assert json.loads(a)["format_version"] == "hopf-report v1"


def test_invalid_structure_aborts(h4):
    bad = dataclasses.replace(h4, antipode=tuple(h4.basis(i) for i in range(4)))
    with pytest.raises(SuiteAbort):
        run_suite(bad, "standard")


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite(sweedler4(), "everything")
