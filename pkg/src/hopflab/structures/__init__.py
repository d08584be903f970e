"""Coalgebras, algebras and Hopf algebras by structure constants."""

from .axioms import anti_coalgebra_violations, hopf_map_violations, validate
from .core import AlgebraData, Coalgebra, HopfAlgebra, dual, restrict_hopf
from .radical import jacobson_radical, radical_violations

__all__ = [
    "AlgebraData", "Coalgebra", "HopfAlgebra", "dual", "restrict_hopf", "validate",
    "anti_coalgebra_violations", "hopf_map_violations", "jacobson_radical", "radical_violations",
]
