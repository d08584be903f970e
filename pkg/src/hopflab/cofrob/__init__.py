"""Integrals, comodule decompositions, injective hulls and exact sequences."""

from .comodules import (
    Comodule,
    ComoduleError,
    comodule_violations,
    endomorphism_algebra,
    generated,
    hom_space,
    indecomposable_decomposition,
    is_local,
    is_simple,
    pushforward,
    quotient,
    radical,
    regular,
    restrict,
    simple_decomposition,
    socle,
    trivial,
)
from .exact import (
    ExactSequenceData,
    ExactSequenceError,
    build_exact_sequence,
    check_exseq_theorems,
    subalgebra_embedding,
)
from .idempotents import DecompositionError, primitive_idempotents
from .theorems import (
    Hull,
    IntegralData,
    IntegralError,
    check_integral_vanishing,
    check_radford,
    cotensor,
    finite_quotient_check,
    hull_dimension_identity,
    hull_of_unit,
    injective_hull,
    injective_implies_projective_check,
    integral_checks,
    is_cosemisimple,
    left_integrals,
    lemma_maximal_subcomodule,
    projectivity_certificate,
    right_integrals,
    socle_report,
    unique_maximal_subcomodule,
    unit_line,
)


def comodule_of_H(h, side: str = "left") -> Comodule:
    return regular(h, side)


__all__ = [
    "Comodule",
    "ComoduleError",
    "DecompositionError",
    "ExactSequenceData",
    "ExactSequenceError",
    "Hull",
    "IntegralData",
    "IntegralError",
    "build_exact_sequence",
    "check_exseq_theorems",
    "check_integral_vanishing",
    "check_radford",
    "comodule_of_H",
    "comodule_violations",
    "cotensor",
    "endomorphism_algebra",
    "finite_quotient_check",
    "generated",
    "hom_space",
    "hull_dimension_identity",
    "hull_of_unit",
    "indecomposable_decomposition",
    "injective_hull",
    "injective_implies_projective_check",
    "integral_checks",
    "is_cosemisimple",
    "is_local",
    "is_simple",
    "left_integrals",
    "lemma_maximal_subcomodule",
    "projectivity_certificate",
    "primitive_idempotents",
    "pushforward",
    "quotient",
    "radical",
    "regular",
    "restrict",
    "right_integrals",
    "simple_decomposition",
    "socle",
    "socle_report",
    "subalgebra_embedding",
    "trivial",
    "unique_maximal_subcomodule",
    "unit_line",
]
