"""
Builders for N_m(V) and L_m(V, v_ell).

N_m(V):  0 -> S_m V -> S_(m-1,1) V -> ... -> S_(1,1^{m-1}) V = Lambda^m V -> 0
L_m:     0 -> span(v_ell^{m-1}) -> S_{m-1} V -> V' (x) S_{m-2} V -> ...
            -> Lambda^{m-1} V' -> 0,
with L_i = Lambda^i V' (x) S_{m-1-i} V and V' spanned by v_k, k != ell.
"""

import logging
from typing import List, Optional

import numpy as np

from src.complexes.chain_complex import ChainComplexFp
from src.complexes.terms import RawTerm
from src.config import get_limits
from src.exceptions import InvariantViolation, PreconditionError
from src.ffield.field import Prime
from src.multilinear.basis import BasisTensor, TensorSpaceBasis, enumerate_basis
from src.multilinear.maps import phi_on
from src.multilinear.sparse_matrix import FpSparseMatrix
from src.schur.hook_module import HookModule, build_hook_module
from src.schur.shapes import HookShape

logger = logging.getLogger(__name__)


def _require_divisible(m: int, prime: Prime):
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")
    if not prime.divides(m):
        raise PreconditionError(
            f"p must divide m for phi to descend to S_(m-i,1^i)(V), "
            f"got m={m}, p={prime}"
        )


def hook_terms(
    m: int, n: int, prime: Prime, max_dim: Optional[int] = None
) -> List[HookModule]:
    """The modules S_(m-i,1^i)(V), i = 0..m-1."""
    return [
        build_hook_module(HookShape(m - i, i), n, prime, max_dim) for i in range(m)
    ]


def induced_phi(source: HookModule, target: HookModule) -> FpSparseMatrix:
    """phi on reduced coordinates, after checking it kills one relation."""
    ambient_phi = phi_on(source.ambient, target.ambient, source.prime)
    if source.presentation.cols:
        relation = np.zeros(len(source.ambient), dtype=np.int64)
        for r, value in source.presentation.column(0).items():
            relation[r] = value
        if target.reduce(ambient_phi.apply(relation)).any():
            raise InvariantViolation(
                f"phi does not descend from S_{source.shape} to S_{target.shape}"
            )
    return source.induced_matrix(ambient_phi, target)


def build_Nm(
    m: int, n: int, prime: Prime, max_dim: Optional[int] = None
) -> ChainComplexFp:
    """N_m(V) with differentials induced by phi; d^2 = 0 is verified here."""
    _require_divisible(m, prime)
    terms = hook_terms(m, n, prime, max_dim)
    differentials = tuple(
        induced_phi(terms[i], terms[i + 1]) for i in range(len(terms) - 1)
    )
    complex_ = ChainComplexFp(tuple(terms), differentials, prime, m, n, kind="N")
    if not complex_.d_squared_zero():
        raise InvariantViolation(f"d^2 != 0 in N_{m} at n={n}, p={prime}")
    logger.info(
        "built N_%d at n=%d, p=%d: term dims %s",
        m,
        n,
        prime.value,
        complex_.dimensions(),
    )
    return complex_


def lm_bases(
    m: int, n: int, ell: int, max_dim: Optional[int] = None
) -> List[TensorSpaceBasis]:
    """Bases of L_i = Lambda^i V' (x) S_{m-1-i} V, i = 0..m-1."""
    limit = max_dim if max_dim is not None else get_limits().max_dim
    return [
        enumerate_basis(n, i, m - 1 - i, max_dim=limit).avoiding(ell)
        for i in range(m)
    ]


def build_Lm(
    m: int, n: int, prime: Prime, ell: int, max_dim: Optional[int] = None
) -> ChainComplexFp:
    """L_m(V, v_ell); its differential is phi without the v_ell term."""
    if not 1 <= ell <= n:
        raise PreconditionError(f"ell must be in [1, {n}], got {ell}")
    _require_divisible(m, prime)
    bases = lm_bases(m, n, ell, max_dim)
    differentials = tuple(
        phi_on(bases[i], bases[i + 1], prime, skip=ell) for i in range(m - 1)
    )

    power = tuple((m - 1) if k == ell else 0 for k in range(1, n + 1))
    augmentation = FpSparseMatrix(
        len(bases[0]), 1, prime, {(bases[0].position(BasisTensor((), power)), 0): 1}
    )
    complex_ = ChainComplexFp(
        tuple(RawTerm(b) for b in bases),
        differentials,
        prime,
        m,
        n,
        kind="L",
        ell=ell,
        augmentation=augmentation,
    )
    if not complex_.d_squared_zero():
        raise InvariantViolation(f"d^2 != 0 in L_{m} at n={n}, p={prime}, ell={ell}")
    return complex_
