"""
Tensor spaces Lambda^i V (x) S_j V and the maps between them.

This package contains:
- BasisTensor / TensorSpaceBasis: canonical indexed bases
- Multidegree: torus weights of basis tensors
- FpSparseMatrix: exact sparse matrices over F_p
- phi, kappa, homotopy, eta' and Frobenius maps as matrices
- the GL_n(F_p) action on tensor spaces
"""

from src.multilinear.action import (
    diagonal_matrix,
    elementary_matrix,
    gl_action_matrix,
)
from src.multilinear.basis import (
    BasisTensor,
    Multidegree,
    TensorSpaceBasis,
    enumerate_basis,
    multidegree,
)
from src.multilinear.maps import (
    eta_prime_matrix,
    frobenius_power_map,
    kappa_matrix,
    phi_matrix,
)
from src.multilinear.sparse_matrix import FpSparseMatrix

__all__ = [
    "BasisTensor",
    "FpSparseMatrix",
    "Multidegree",
    "TensorSpaceBasis",
    "diagonal_matrix",
    "elementary_matrix",
    "enumerate_basis",
    "eta_prime_matrix",
    "frobenius_power_map",
    "gl_action_matrix",
    "kappa_matrix",
    "multidegree",
    "phi_matrix",
]
