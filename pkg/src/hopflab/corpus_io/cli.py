"""Command-line entry point: ``hopf-lab <command> ...``.

Exit status: 0 when every check passes, 1 when a check fails, 2 for
unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..structures import validate
from ..structures.core import HopfAlgebra
from .builders import BUILDER_NAMES, InvalidParameters, build, default_corpus
from .format import FormatError, parse, parse_hopf, parse_map, parse_yd, serialize, serialize_yd, sha256_text
from .suite import SUITES, SuiteAbort, jsonable, report_failed, report_text, run_suite

OK, FAILED, INVALID = 0, 1, 2


class InputError(Exception):
    """Bad input; reported on stderr with exit status 2."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_hopf(path: str) -> tuple[HopfAlgebra, str]:
    text = _read(path)
    h = parse_hopf(text)
    bad = validate(h)
    if bad:
        raise InputError(f"{path} is not a Hopf algebra: {bad[0]}")
    return h, text


def _emit(obj, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        return
    for k, v in obj.items():
        out.write(f"{k}: {json.dumps(v, sort_keys=True, ensure_ascii=False)}\n")


# -- commands -----------------------------------------------------------------

def cmd_validate(args) -> int:
    s, S = parse(_read(args.file))
    bad = validate(s)
    if S is not None:
        from ..structures.axioms import anti_coalgebra_violations

        bad += anti_coalgebra_violations(s, S)
    kind = "hopf" if isinstance(s, HopfAlgebra) else "coalgebra"
    if bad:
        print(f"INVALID {kind} dim={s.dim}")
        for line in bad:
            print(f"  {line}")
        return FAILED
    print(f"OK {kind} dim={s.dim} field={json.dumps(s.field.spec(), sort_keys=True)}")
    return OK


def cmd_invariants(args) -> int:
    from ..graded import gr_standard
    from ..structures.filtrations import coradical, coradical_filtration, hopf_coradical, product_span

    h, _ = _load_hopf(args.file)
    H0 = coradical(h)
    res = hopf_coradical(h)
    out = {
        "dim": h.dim,
        "coradical_dim": H0.dim,
        "coradical_is_subalgebra": H0.contains_subspace(product_span(h, H0, H0)),
        "coradical_filtration_dims": list(coradical_filtration(h).dims),
        "hopf_coradical_dim": res.subspace.dim,
        "m": res.m,
        "gr_layer_dims": list(gr_standard(h).layer_dims),
    }
    _emit(out, args.json)
    return OK


def cmd_integrals(args) -> int:
    from ..cofrob import integral_checks, left_integrals, right_integrals

    h, _ = _load_hopf(args.file)
    checks = integral_checks(h)
    L, R = left_integrals(h), right_integrals(h)
    out = {"left_integral": L.integral, "right_integral": R.integral, "grouplike_vector": L.grouplike}
    out.update(checks)
    _emit(jsonable(out, h.field), args.json)
    return OK if all(v for v in checks.values() if isinstance(v, bool)) else FAILED


def cmd_grcheck(args) -> int:
    from ..graded import check_graded_standard_filtration, gr_standard, verify_bosonization_iso

    h, _ = _load_hopf(args.file)
    G = gr_standard(h)
    filt = check_graded_standard_filtration(G)
    boson = verify_bosonization_iso(G)
    out = {"layer_dims": list(G.layer_dims), "graded_standard_filtration": filt, "bosonization": boson}
    _emit(jsonable(out, h.field), args.json)
    return OK if filt["ok"] and boson["ok"] else FAILED


def cmd_exactseq(args) -> int:
    from ..cofrob import ExactSequenceError, build_exact_sequence, check_exseq_theorems

    A, _ = _load_hopf(args.A)
    B, _ = _load_hopf(args.B)
    F, M = parse_map(_read(args.embedding))
    if F != B.field or F != A.field:
        raise InputError("embedding field differs from the algebras' field")
    if len(M) != A.dim or any(len(r) != B.dim for r in M):
        raise InputError(f"embedding must be {A.dim} x {B.dim}")
    try:
        seq = build_exact_sequence(A, B, M)
    except ExactSequenceError as exc:
        raise InputError(str(exc)) from None
    try:
        rep = check_exseq_theorems(seq)
    except ExactSequenceError as exc:
        print(f"FAIL {exc}")
        return FAILED
    _emit(jsonable(rep), args.json)
    return OK


def cmd_nichols(args) -> int:
    from ..graded import yd_violations
    from ..nichols import BraidingError, SizeGuardError, nichols_dims

    yd = parse_yd(_read(args.ydfile))
    bad = yd_violations(yd)
    if bad:
        raise InputError(f"not a Yetter-Drinfeld module: {bad[0]}")
    try:
        t = nichols_dims(yd, args.max_degree, allow_large=args.allow_large)
    except SizeGuardError as exc:
        raise InputError(f"{exc}; pass --allow-large to override") from None
    except BraidingError as exc:
        print(f"FAIL {exc}")
        return FAILED
    _emit({"dims": list(t.dims), "total": t.total}, args.json)
    return OK


def _params(pairs) -> dict:
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise InvalidParameters(f"parameter {p!r} is not of the form k=v")
        k, v = p.split("=", 1)
        out[k] = v
    return out


def build_document(name: str, params: dict) -> str:
    """Serialized text for a builder name, including the YD builders."""
    from ..nichols import degree_one_yd, zeta_yd

    if name == "yd_zeta":
        return serialize_yd(zeta_yd(int(params.get("n", 3))))
    if name == "yd_diagram":
        inner = dict(params)
        of = inner.pop("of", "taft")
        h = build(of, **inner)
        if not isinstance(h, HopfAlgebra):
            raise InvalidParameters(f"{of} is not a Hopf algebra")
        return serialize_yd(degree_one_yd(h))
    obj = build(name, **params)
    if isinstance(obj, tuple):
        return serialize(*obj)
    return serialize(obj)


def cmd_corpus_build(args) -> int:
    try:
        text = build_document(args.name, _params(args.param))
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None
    if args.output and args.output != "-":
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return OK


def _run_one(h, suite, name, sha) -> tuple[dict | None, str | None]:
    try:
        return run_suite(h, suite, name, sha), None
    except SuiteAbort as exc:
        return None, str(exc)


def cmd_check_theorems(args) -> int:
    text = _read(args.file)
    h = parse_hopf(text)
    report, err = _run_one(h, args.suite, Path(args.file).name, sha256_text(text))
    if report is None:
        print(f"ABORT {err}", file=sys.stderr)
        return FAILED
    out = report_text(report)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return FAILED if report_failed(report) else OK


def cmd_corpus_run_all(args) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    status = OK
    for name, h in default_corpus():
        text = serialize(h)
        again = serialize(parse_hopf(text))
        if again != text:
            print(f"{name}: round-trip differs")
            status = FAILED
        (outdir / f"{name}.hopf.json").write_text(text, encoding="utf-8")
        report, err = _run_one(h, args.suite, name, sha256_text(text))
        if report is None:
            print(f"{name}: ABORT {err}")
            status = FAILED
            continue
        (outdir / f"{name}.report.json").write_text(report_text(report), encoding="utf-8")
        s = report["summary"]
        print(f"{name}: pass={s['pass']} fail={s['fail']} degenerate={s['degenerate']}")
        if report_failed(report):
            status = FAILED
    return status


# -- parser -------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopf-lab", description="Exact checks on finite-dimensional Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("validate", cmd_validate, "check the axioms of a structure file")
    sp.add_argument("file")
    for name, fn, help_ in (("invariants", cmd_invariants, "coradical and filtration data"),
                            ("integrals", cmd_integrals, "left and right integrals"),
                            ("grcheck", cmd_grcheck, "graded filtration and bosonization checks")):
        sp = add(name, fn, help_)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true")
    sp = add("exactseq", cmd_exactseq, "build and check an exact sequence A -> B -> B/BA+")
    sp.add_argument("A")
    sp.add_argument("B")
    sp.add_argument("--embedding", required=True, help="hopf-map file with the matrix of A -> B")
    sp.add_argument("--json", action="store_true")
    sp = add("nichols", cmd_nichols, "graded dimensions of a Nichols algebra")
    sp.add_argument("ydfile")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp = add("check-theorems", cmd_check_theorems, "run a theorem suite and print the report")
    sp.add_argument("file")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("-o", "--output")

    corpus = add("corpus", None, "corpus builders and batch runs")
    csub = corpus.add_subparsers(dest="corpus_command", required=True)
    b = csub.add_parser("build", help="write a corpus member; names: "
                        + ", ".join(BUILDER_NAMES + ("yd_zeta", "yd_diagram")))
    b.add_argument("name")
    b.add_argument("--param", action="append", metavar="K=V")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_corpus_build)
    r = csub.add_parser("run-all", help="round-trip and run a suite on every default member")
    r.add_argument("--suite", choices=SUITES, default="all")
    r.add_argument("-o", "--output", default="reports")
    r.set_defaults(func=cmd_corpus_run_all)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, InvalidParameters) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
