"""Theorem-suite runner producing deterministic JSON reports."""

from __future__ import annotations

import json
from typing import Any, Callable

from ..exactla import Subspace
from ..structures import jacobson_radical, radical_violations, validate
from ..structures.core import HopfAlgebra, dual
from ..structures.filtrations import (
    coradical,
    coradical_filtration,
    coradical_filtration_via_radical,
    gr_dual_compat,
    hopf_coradical,
    j_omega,
    product_span,
    standard_filtration,
    standard_filtration_checks,
    verify_hopf_filtration,
    wedge,
)

REPORT_VERSION = "hopf-report v1"
SUITES = ("standard", "graded", "cofrob", "nichols", "all")

PASS, FAIL, DEGENERATE = "pass", "fail", "degenerate"


def jsonable(x: Any, F=None) -> Any:
    """Field elements become their textual form; tuples become lists."""
    if isinstance(x, dict):
        return {str(k): jsonable(v, F) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v, F) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Subspace):
        return {"dim": x.dim}
    if F is not None:
        try:
            return F.to_text(x)
        except Exception:
            pass
    return str(x)


class _Runner:
    def __init__(self, h: HopfAlgebra):
        self.h = h
        self.checks: list[dict] = []
        self.notes: list[str] = []

    def add(self, name: str, status: str, data: dict | None = None) -> None:
        self.checks.append({"name": name, "status": status, "data": jsonable(data or {}, self.h.field)})

    def check(self, name: str, fn: Callable[[], tuple[bool, dict]]) -> None:
        ok, data = fn()
        self.add(name, PASS if ok else FAIL, data)


def _standard(r: _Runner) -> None:
    h = r.h
    bad = validate(h)
    r.add("axioms", FAIL if bad else PASS, {"violations": bad[:5]})
    if bad:
        raise SuiteAbort("structure fails the Hopf algebra axioms")

    def radicals():
        J = jacobson_radical(h)
        Jd = jacobson_radical(dual(h))
        bad = radical_violations(h, J) + radical_violations(dual(h), Jd)
        return not bad, {"radical_dim": J.dim, "dual_radical_dim": Jd.dim, "violations": bad[:3]}

    r.check("jacobson_radicals", radicals)

    def cofilt():
        a, b = coradical_filtration(h), coradical_filtration_via_radical(h)
        H0 = coradical(h)
        w = wedge(h, H0, H0, cross_check=True)
        return a.chain == b.chain and w == a.term(1), {
            "coradical_dim": H0.dim, "filtration_dims": a.dims, "layer_dims": a.layer_dims()}

    r.check("coradical_filtration", cofilt)

    res = hopf_coradical(h)
    H0 = coradical(h)
    sub = H0.contains_subspace(product_span(h, H0, H0))
    r.add("hopf_coradical", PASS, {"dim": res.subspace.dim, "m": res.m, "partial_dims": res.partial_dims,
                                   "coradical_is_subalgebra": sub})

    def cor_hopf_filtration():
        fails = verify_hopf_filtration(h, coradical_filtration(h))
        is_hopf = not fails
        return is_hopf == sub, {"is_hopf_filtration": is_hopf, "coradical_is_subalgebra": sub}

    r.check("coradical_filtration_hopf_iff_subalgebra", cor_hopf_filtration)

    def std():
        rep = standard_filtration_checks(h)
        rep["standard_dims"] = standard_filtration(h).dims
        return rep["ok"], rep

    r.check("standard_filtration", std)

    def m_check():
        H00 = res.subspace
        power = H0
        acc = H0 + Subspace.span(h.field, h.dim, [h.unit])
        for _ in range(res.m):
            power = product_span(h, power, H0)
            acc = acc + power
        return acc == H00, {"m": res.m}

    r.check("hopf_coradical_power", m_check)

    def jw():
        Jw = j_omega(h, cross_check=True)
        rep = gr_dual_compat(h)
        rep["jomega_dim"] = Jw.dim
        return rep["ok"], rep

    r.check("j_omega", jw)
    r.add("finite_generation", DEGENERATE, {"reason": "finite-dimensional; generation is automatic"})


def _graded(r: _Runner) -> None:
    from ..graded import (
        braided_antipode,
        check_graded_standard_filtration,
        diagram,
        diagram_violations,
        gr_standard,
        verify_bosonization_iso,
        yd_structure,
        yd_violations,
    )

    h = r.h
    G = gr_standard(h)
    bad = validate(G.hopf)
    r.add("gr_axioms", FAIL if bad else PASS, {"layer_dims": G.layer_dims, "violations": bad[:3]})

    def gsf():
        rep = check_graded_standard_filtration(G)
        return rep["ok"], rep

    r.check("graded_standard_filtration", gsf)
    D = diagram(h)

    def diag():
        bad = diagram_violations(D)
        braided_antipode(D)
        return not bad, {"dim": D.dim, "layer_dims": D.layer_dims, "violations": bad[:3]}

    r.check("diagram", diag)

    def yd():
        bad = yd_violations(yd_structure(G, D))
        return not bad, {"violations": bad[:3]}

    r.check("yetter_drinfeld", yd)

    def boson():
        rep = verify_bosonization_iso(G)
        return rep["ok"], rep

    r.check("bosonization_iso", boson)

    def dims():
        H00 = hopf_coradical(h).subspace
        return G.hopf.dim == D.dim * H00.dim, {"dim_gr": G.hopf.dim, "dim_R": D.dim, "dim_H00": H00.dim}

    r.check("dimension_count", dims)


def _cofrob(r: _Runner) -> None:
    from ..cofrob import (
        build_exact_sequence,
        check_exseq_theorems,
        check_radford,
        cotensor,
        finite_quotient_check,
        hull_dimension_identity,
        hull_of_unit,
        injective_implies_projective_check,
        integral_checks,
        is_cosemisimple,
        is_local,
        left_integrals,
        lemma_maximal_subcomodule,
        regular,
        restrict,
        right_integrals,
        socle_report,
        trivial,
    )
    from ..cofrob.theorems import regular_summands
    from .builders import group_algebra

    h = r.h
    F = h.field

    def integrals():
        rep = integral_checks(h)
        L, R = left_integrals(h), right_integrals(h)
        g = L.grouplike
        nz = [i for i, x in enumerate(g) if x != F.zero]
        rep.update({"left_integral": L.integral, "right_integral": R.integral,
                    "grouplike_vector": g, "grouplike_index": nz[0] if len(nz) == 1 else None})
        return all(v for k, v in rep.items() if isinstance(v, bool)), rep

    r.check("integrals", integrals)
    r.add("cosemisimple", PASS, {"value": is_cosemisimple(h)})

    def soc():
        rep = socle_report(h)
        return rep["socle_is_coradical"], rep

    r.check("socle", soc)

    def decomp():
        out = {}
        ok = True
        for side in ("left", "right"):
            parts = regular_summands(h, side)
            M = regular(h, side)
            local = all(is_local(restrict(M, P)) for P in parts)
            ok = ok and local and sum(P.dim for P in parts) == h.dim
            out[side] = [P.dim for P in parts]
        return ok, out

    r.check("indecomposable_decomposition", decomp)

    def hulls():
        return True, {"left": hull_of_unit(h, "left").dim, "right": hull_of_unit(h, "right").dim}

    r.check("injective_hull_of_unit", hulls)

    def radford():
        rep = check_radford(h)
        return rep["ok"], rep

    r.check("radford", radford)

    def lemma():
        rep = lemma_maximal_subcomodule(h)
        return rep["ok"], rep

    r.check("maximal_subcomodule", lemma)

    def proj():
        rep = injective_implies_projective_check(h)
        return rep["ok"], rep

    r.check("injective_implies_projective", proj)

    def quot():
        rep = finite_quotient_check(h)
        return rep["ok"], rep

    r.check("finite_quotient", quot)

    def hull_id():
        rep = hull_dimension_identity(h)
        return rep["ok"], rep

    r.check("hull_dimension_identity", hull_id)

    def cot():
        E = hull_of_unit(h, "left").subspace
        X = restrict(regular(h, "left"), E)
        a = cotensor(regular(h, "right"), X).dim
        b = cotensor(trivial(h, "right"), regular(h, "left")).dim
        return a == X.dim and b == 1, {"H_box_hull": a, "hull_dim": X.dim, "k_box_H": b}

    r.check("cotensor_units", cot)

    def exseq():
        k = group_algebra([[0]], ["1"], F)
        seq = build_exact_sequence(k, h, (h.unit,))
        rep = check_exseq_theorems(seq)
        return rep["ok"], rep

    r.check("exact_sequence_trivial", exseq)
    r.add("co_frobenius_biconditional", DEGENERATE,
          {"reason": "every finite-dimensional Hopf algebra has a nonzero integral"})


def _nichols(r: _Runner) -> None:
    from ..nichols import braiding_from_yd, degree_one_yd, diagram_is_nichols, SizeGuardError
    from ..cofrob import socle_report

    h = r.h
    yd = degree_one_yd(h)

    def braid():
        c = braiding_from_yd(yd)
        return True, {"dim": c.dim}

    r.check("braiding", braid)
    try:
        rep = diagram_is_nichols(h)
    except SizeGuardError as exc:
        r.notes.append(f"diagram_vs_nichols skipped: {exc}")
        return
    pointed = all(d == 1 for d in socle_report(h)["simple_dims"])
    if pointed:
        r.add("diagram_vs_nichols", PASS if rep["equal"] else FAIL, rep)
    else:
        rep["reported_only"] = True
        r.add("diagram_vs_nichols", PASS, rep)


class SuiteAbort(RuntimeError):
    pass


_ORDER = {"standard": [_standard], "graded": [_graded], "cofrob": [_cofrob], "nichols": [_nichols],
          "all": [_standard, _graded, _cofrob, _nichols]}


def run_suite(h: HopfAlgebra, suite: str = "all", name: str = "", sha256: str = "") -> dict:
    if suite not in _ORDER:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    r = _Runner(h)
    for step in _ORDER[suite]:
        step(r)
    counts = {s: sum(1 for c in r.checks if c["status"] == s) for s in (PASS, FAIL, DEGENERATE)}
    return {
        "format_version": REPORT_VERSION,
        "subject": {"name": name, "sha256": sha256, "dim": h.dim, "field": h.field.spec()},
        "suite": suite,
        "checks": r.checks,
        "summary": counts,
        "notes": r.notes,
    }


def report_text(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_failed(report: dict) -> bool:
    return report["summary"][FAIL] > 0


__all__ = ["REPORT_VERSION", "SUITES", "run_suite", "report_text", "report_failed", "jsonable",
           "SuiteAbort"]
