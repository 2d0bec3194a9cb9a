"""
K_0 in the split model with Euler characteristics and Adams operations.
"""

from src.ktheory.k0 import (
    EulerData,
    K0Class,
    adams_composition_check,
    adams_grayson,
    euler_characteristic,
    euler_data,
    euler_from_cohomology,
    frobenius_adams_check,
    lambda_class,
    newton_identity_check,
    ring_hom_check,
    secondary_euler_characteristic,
)

__all__ = [
    "EulerData",
    "K0Class",
    "adams_composition_check",
    "adams_grayson",
    "euler_characteristic",
    "euler_data",
    "euler_from_cohomology",
    "frobenius_adams_check",
    "lambda_class",
    "newton_identity_check",
    "ring_hom_check",
    "secondary_euler_characteristic",
]
