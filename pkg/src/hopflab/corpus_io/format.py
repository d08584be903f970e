"""Text formats for structure constants, maps and Yetter-Drinfeld data.

Documents are JSON objects written one top-level key per line in a fixed
order, with compact values, so that serialize(parse(text)) == text.
Scalars use the field's textual form: "a/b" over Q, integers over GF(p),
coefficient lists over Cyc(n).
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from ..exactla import field_from_spec
from ..graded import YDModuleData
from ..structures.core import Coalgebra, HopfAlgebra

HOPF_VERSION = "hopf-sc v1"
YD_VERSION = "hopf-yd v1"
MAP_VERSION = "hopf-map v1"


class FormatError(ValueError):
    pass


def _dump(items: list[tuple[str, Any]]) -> str:
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'), ensure_ascii=False)}" for k, v in items]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _scalars(F, vec) -> list:
    return [F.to_text(x) for x in vec]


def _structure_items(s) -> list[tuple[str, Any]]:
    F = s.field
    items: list[tuple[str, Any]] = [("field", F.spec()), ("dim", s.dim), ("names", list(s.names))]
    if hasattr(s, "mult"):
        mult = sorted((i, j, k, c) for i in range(s.dim) for j in range(s.dim) for k, c in s.mult[i][j])
        items.append(("mult", [[i, j, k, F.to_text(c)] for i, j, k, c in mult]))
        items.append(("unit", _scalars(F, s.unit)))
    if hasattr(s, "comult"):
        comult = sorted((i, j, k, c) for i in range(s.dim) for j, k, c in s.comult[i])
        items.append(("comult", [[i, j, k, F.to_text(c)] for i, j, k, c in comult]))
        items.append(("counit", _scalars(F, s.counit)))
    if hasattr(s, "antipode"):
        items.append(("antipode", [_scalars(F, r) for r in s.antipode]))
    return items


def serialize(s, S=None) -> str:
    """A Hopf algebra, or a coalgebra with an optional endomorphism S."""
    if isinstance(s, HopfAlgebra):
        kind = "hopf"
    elif isinstance(s, Coalgebra):
        kind = "coalgebra"
    else:
        raise FormatError(f"cannot serialize {type(s).__name__}")
    items = [("format_version", HOPF_VERSION), ("kind", kind)] + _structure_items(s)
    if S is not None:
        items.append(("S", [_scalars(s.field, r) for r in S]))
    return _dump(items)


def _require(doc: dict, key: str):
    if key not in doc:
        raise FormatError(f"missing field {key!r}")
    return doc[key]


def _triples(F, entries, d: int, name: str) -> dict:
    out: dict = {}
    for e in entries:
        if not isinstance(e, list) or len(e) != 4:
            raise FormatError(f"{name} entries must be [i, j, k, scalar]")
        i, j, k = e[0], e[1], e[2]
        if not all(isinstance(x, int) and 0 <= x < d for x in (i, j, k)):
            raise FormatError(f"{name} index out of range in {e!r}")
        out.setdefault(i, {})
        out[i][(j, k)] = F.add(out[i].get((j, k), F.zero), F.parse(e[3]))
    return out


def _vector(F, vals, d: int, name: str) -> tuple:
    if not isinstance(vals, list) or len(vals) != d:
        raise FormatError(f"{name} must have length {d}")
    return tuple(F.parse(x) for x in vals)


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be an object")
    return doc


def parse_structure_doc(doc: dict):
    try:
        F = field_from_spec(_require(doc, "field"))
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad field: {exc}") from None
    d = _require(doc, "dim")
    if not isinstance(d, int) or d < 1:
        raise FormatError("dim must be a positive integer")
    names = _require(doc, "names")
    if not isinstance(names, list) or len(names) != d or len(set(names)) != d:
        raise FormatError("names must be a list of distinct strings of length dim")
    try:
        comult = _triples(F, _require(doc, "comult"), d, "comult")
        counit = _vector(F, _require(doc, "counit"), d, "counit")
        kind = doc.get("kind", "hopf")
        if kind == "coalgebra":
            C = Coalgebra.build(F, names, comult, counit)
            S = doc.get("S")
            if S is not None:
                S = tuple(_vector(F, r, d, "S row") for r in S)
                if len(S) != d:
                    raise FormatError("S must have dim rows")
            return C, S
        if kind != "hopf":
            raise FormatError(f"unknown kind {kind!r}")
        mult = {}
        for i, row in _triples(F, _require(doc, "mult"), d, "mult").items():
            for (j, k), c in row.items():
                mult.setdefault((i, j), {})[k] = c
        unit = _vector(F, _require(doc, "unit"), d, "unit")
        anti = _require(doc, "antipode")
        if not isinstance(anti, list) or len(anti) != d:
            raise FormatError("antipode must have dim rows")
        anti = [_vector(F, r, d, "antipode row") for r in anti]
        return HopfAlgebra.build(F, names, mult, unit, comult, counit, anti), None
    except FormatError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from None


def parse(text: str):
    """Returns (structure, S or None)."""
    doc = _load(text)
    if doc.get("format_version") != HOPF_VERSION:
        raise FormatError(f"expected format_version {HOPF_VERSION!r}")
    return parse_structure_doc(doc)


def parse_hopf(text: str) -> HopfAlgebra:
    s, _ = parse(text)
    if not isinstance(s, HopfAlgebra):
        raise FormatError("expected a Hopf algebra document")
    return s


def serialize_map(F, M) -> str:
    rows, cols = len(M), (len(M[0]) if M else 0)
    entries = [[i, j, F.to_text(x)] for i, r in enumerate(M) for j, x in enumerate(r) if x != F.zero]
    return _dump([("format_version", MAP_VERSION), ("field", F.spec()), ("rows", rows),
                  ("cols", cols), ("entries", entries)])


def parse_map(text: str):
    doc = _load(text)
    if doc.get("format_version") != MAP_VERSION:
        raise FormatError(f"expected format_version {MAP_VERSION!r}")
    try:
        F = field_from_spec(_require(doc, "field"))
        r, c = int(_require(doc, "rows")), int(_require(doc, "cols"))
        M = [[F.zero] * c for _ in range(r)]
        for i, j, x in _require(doc, "entries"):
            if not (0 <= i < r and 0 <= j < c):
                raise FormatError("map entry out of range")
            M[i][j] = F.parse(x)
    except FormatError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise FormatError(str(exc)) from None
    return F, tuple(tuple(row) for row in M)


def serialize_yd(yd: YDModuleData) -> str:
    F = yd.L.field
    action = []
    for x in range(yd.L.dim):
        for a in range(yd.dim):
            for b, c in enumerate(yd.action[x][a]):
                if c != F.zero:
                    action.append([x, a, b, F.to_text(c)])
    coaction = [[a, l, b, F.to_text(c)] for a in range(yd.dim) for l, b, c in sorted(yd.coaction[a])]
    hopf = dict(_structure_items(yd.L))
    hopf = {"kind": "hopf", **hopf}
    return _dump([("format_version", YD_VERSION), ("hopf", hopf), ("dim", yd.dim),
                  ("action", action), ("coaction", coaction)])


def parse_yd(text: str) -> YDModuleData:
    doc = _load(text)
    if doc.get("format_version") != YD_VERSION:
        raise FormatError(f"expected format_version {YD_VERSION!r}")
    L, _ = parse_structure_doc(_require(doc, "hopf"))
    if not isinstance(L, HopfAlgebra):
        raise FormatError("YD document must embed a Hopf algebra")
    F, n = L.field, L.dim
    v = _require(doc, "dim")
    if not isinstance(v, int) or v < 0:
        raise FormatError("dim must be a nonnegative integer")
    try:
        act = [[[F.zero] * v for _ in range(v)] for _ in range(n)]
        for x, a, b, c in _require(doc, "action"):
            act[x][a][b] = F.add(act[x][a][b], F.parse(c))
        co: list[dict] = [dict() for _ in range(v)]
        for a, l, b, c in _require(doc, "coaction"):
            if not (0 <= a < v and 0 <= l < n and 0 <= b < v):
                raise FormatError("coaction index out of range")
            co[a][(l, b)] = F.add(co[a].get((l, b), F.zero), F.parse(c))
    except FormatError:
        raise
    except (ValueError, TypeError, IndexError) as exc:
        raise FormatError(str(exc)) from None
    action = tuple(tuple(tuple(r) for r in m) for m in act)
    coaction = tuple(tuple(sorted((l, b, c) for (l, b), c in d.items() if c != F.zero)) for d in co)
    return YDModuleData(L, v, action, coaction)


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


__all__ = ["FormatError", "HOPF_VERSION", "YD_VERSION", "MAP_VERSION", "serialize", "parse",
           "parse_hopf", "serialize_map", "parse_map", "serialize_yd", "parse_yd", "sha256_text"]
