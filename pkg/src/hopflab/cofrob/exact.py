"""Exact sequences k -> A -> B -> C -> k of finite-dimensional Hopf algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exactla import Subspace
from ..exactla.linalg import Mat, mat_mul, rank
from ..exactla.subspace import kernel, quotient_basis
from ..graded import coinvariants
from ..structures.axioms import hopf_map_violations, validate
from ..structures.core import HopfAlgebra, _vector_name, restrict_hopf
from ..structures.filtrations import product_span
from .theorems import is_cosemisimple, left_integrals


class ExactSequenceError(ValueError):
    pass


@dataclass(frozen=True)
class ExactSequenceData:
    A: HopfAlgebra
    B: HopfAlgebra
    C: HopfAlgebra
    iota: tuple
    pi: tuple
    BA_plus: Subspace
    coinvariants: Subspace


def adjoint_violations(B: HopfAlgebra, image: Subspace) -> list[str]:
    """b_(1) a S(b_(2)) must stay in the image for basis b and a."""
    F = B.field
    out = []
    for i in range(B.dim):
        for a in image.basis:
            tot = [F.zero] * B.dim
            for j, k, c in B.comult[i]:
                term = B.product(B.product(B.basis(j), a), B.antipode[k])
                for t, x in enumerate(term):
                    if x != F.zero:
                        tot[t] = F.add(tot[t], F.mul(c, x))
            if not image.contains(tot):
                out.append(f"adjoint action of {B.names[i]} leaves the subalgebra")
                break
    return out


def subalgebra_embedding(B: HopfAlgebra, U: Subspace) -> tuple[HopfAlgebra, tuple]:
    """A Hopf subalgebra as an abstract algebra plus its inclusion matrix."""
    return restrict_hopf(B, U), U.basis


def _quotient_hopf(B: HopfAlgebra, I: Subspace) -> tuple[HopfAlgebra, tuple]:
    F = B.field
    lift, proj = quotient_basis(Subspace.full(F, B.dim), I)
    L, P = lift.rows, proj.rows
    q = len(L)

    def down(v):
        return mat_mul(F, [v], P)[0]

    mult = {}
    for r in range(q):
        for s in range(q):
            v = down(B.product(L[r], L[s]))
            mult[(r, s)] = {k: x for k, x in enumerate(v) if x != F.zero}
    comult = {}
    for r in range(q):
        acc: dict = {}
        for (j, k), c in B.coproduct(L[r]).items():
            for a, x in enumerate(P[j]):
                if x == F.zero:
                    continue
                cx = F.mul(c, x)
                for b, y in enumerate(P[k]):
                    if y != F.zero:
                        acc[(a, b)] = F.add(acc.get((a, b), F.zero), F.mul(cx, y))
        comult[r] = {k: x for k, x in acc.items() if x != F.zero}
    unit = down(B.unit)
    counit = tuple(B.counit_value(v) for v in L)
    anti = [down(B.apply_antipode(v)) for v in L]
    names = ["[" + _vector_name(B, v) + "]" for v in L]
    C = HopfAlgebra.build(F, names, mult, unit, comult, counit, anti)
    return C, P


def build_exact_sequence(A: HopfAlgebra, B: HopfAlgebra, iota: Sequence[Sequence]) -> ExactSequenceData:
    F = B.field
    iota = tuple(tuple(r) for r in iota)
    if rank(F, iota, B.dim) != A.dim:
        raise ExactSequenceError("embedding is not injective")
    bad = hopf_map_violations(iota, A, B)
    if bad:
        raise ExactSequenceError("embedding is not a Hopf map: " + bad[0])
    image = Subspace.span(F, B.dim, iota)
    bad = adjoint_violations(B, image)
    if bad:
        raise ExactSequenceError("subalgebra is not normal: " + bad[0])
    aplus = _augmentation_basis(A)
    Aplus_img = Subspace.span(F, B.dim, mat_mul(F, aplus, iota)) if aplus else Subspace.zero(F, B.dim)
    BAp = product_span(B, Subspace.full(F, B.dim), Aplus_img)
    C, P = _quotient_hopf(B, BAp)
    bad = validate(C)
    if bad:
        raise ExactSequenceError("quotient is not a Hopf algebra: " + bad[0])
    bad = hopf_map_violations(P, B, C)
    if bad:
        raise ExactSequenceError("projection is not a Hopf map: " + bad[0])
    if kernel(Mat(F, P, C.dim)) != BAp:
        raise ExactSequenceError("kernel of the projection differs from B A+")
    co = coinvariants(B, P)
    if co != image:
        raise ExactSequenceError("coinvariants differ from the image of A (not exact)")
    return ExactSequenceData(A, B, C, iota, P, BAp, co)


def _augmentation_basis(A: HopfAlgebra) -> list[tuple]:
    F = A.field
    eps = Subspace.span(F, A.dim, [A.counit])
    return list(eps.annihilator().basis)


def check_exseq_theorems(seq: ExactSequenceData) -> dict:
    """The two finite-dimensional biconditionals; each pair of booleans must agree.

    The co-Frobenius biconditional is vacuous for finite-dimensional algebras
    and is reported as degenerate."""
    F = seq.B.field
    I = left_integrals(seq.B)
    restricted = tuple(I(row) for row in seq.iota)
    nonzero_on_A = any(x != F.zero for x in restricted)
    cA, cB, cC = is_cosemisimple(seq.A), is_cosemisimple(seq.B), is_cosemisimple(seq.C)
    first = {"integral_restricts_nonzero": nonzero_on_A, "C_cosemisimple": cC}
    second = {"B_cosemisimple": cB, "A_and_C_cosemisimple": cA and cC}
    out = {
        "integral_restriction": first,
        "cosemisimplicity": second,
        "first_ok": nonzero_on_A == cC,
        "second_ok": cB == (cA and cC),
        "co_frobenius": "degenerate",
        "dims": (seq.A.dim, seq.B.dim, seq.C.dim),
    }
    out["ok"] = out["first_ok"] and out["second_ok"]
    if not out["ok"]:
        raise ExactSequenceError("biconditional mismatch: " + repr(out))
    return out


__all__ = ["ExactSequenceError", "ExactSequenceData", "adjoint_violations", "subalgebra_embedding",
           "build_exact_sequence", "check_exseq_theorems"]
