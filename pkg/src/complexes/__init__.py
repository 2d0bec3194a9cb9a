"""
The complexes N_m(V) and L_m(V, v_ell) over F_p.

This package contains:
- ChainComplexFp: terms, differentials and the d^2 = 0 check
- build_Nm / build_Lm: the builders
- cohomology: multigraded ranks, dims and characters of H^i
- homotopy_check, descended_homotopy_check, equivariance_check, frobenius_comparison,
  frobenius_tower, short_exact_sequence_check: the verifications
"""

from src.complexes.builders import build_Lm, build_Nm
from src.complexes.chain_complex import ChainComplexFp, corrupt_differential
from src.complexes.checks import (
    complex_summary,
    descended_homotopy_check,
    equivariance_check,
    frobenius_comparison,
    frobenius_tower,
    homotopy_check,
    short_exact_sequence_check,
)
from src.complexes.cohomology import (
    cohomology,
    cohomology_basis,
    cohomology_characters,
    image_character,
)
from src.complexes.terms import ComplexTerm, RawTerm

__all__ = [
    "ChainComplexFp",
    "ComplexTerm",
    "RawTerm",
    "build_Lm",
    "build_Nm",
    "cohomology",
    "cohomology_basis",
    "cohomology_characters",
    "complex_summary",
    "corrupt_differential",
    "descended_homotopy_check",
    "equivariance_check",
    "frobenius_comparison",
    "frobenius_tower",
    "homotopy_check",
    "image_character",
    "short_exact_sequence_check",
]
