"""
Exact arithmetic in the prime field F_p.

This package contains:
- Prime: a validated characteristic
- FpElement: a reduced residue with field operations
- Integer and Lucas-reduced binomial coefficients
"""

from src.ffield.field import (
    FpElement,
    Prime,
    binomial,
    binomial_mod_p,
    lucas_shift_identity_check,
)

__all__ = [
    "FpElement",
    "Prime",
    "binomial",
    "binomial_mod_p",
    "lucas_shift_identity_check",
]
