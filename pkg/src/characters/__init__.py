"""
Integer polynomials and symmetric functions.

This package contains:
- MultiPoly: sparse polynomials in v_1..v_n with a golden text format
- power sums, hook Schur polynomials and Frobenius scaling
- the verifier for p_m = sum (-1)^i s_(m-i,1^i)
"""

from src.characters.multipoly import MultiPoly
from src.characters.symmetric import (
    IdentityResult,
    alternating_hook_sum,
    frobenius_scale,
    hook_character,
    power_sum,
    schur_polynomial,
    symmetry_check,
    verify_power_sum_identity,
)

__all__ = [
    "IdentityResult",
    "MultiPoly",
    "alternating_hook_sum",
    "frobenius_scale",
    "hook_character",
    "power_sum",
    "schur_polynomial",
    "symmetry_check",
    "verify_power_sum_identity",
]
