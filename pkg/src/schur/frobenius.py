"""
The Frobenius subquotient S^p_lambda(V) and the comparison map eta.

S^p_lambda(V) is S_lambda(V) modulo the span of basis elements whose
multidegree has an exponent not divisible by p. Relations preserve
multidegree, so this span does not depend on the chosen basis.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.characters.multipoly import MultiPoly
from src.exceptions import InvariantViolation, PreconditionError
from src.ffield.field import Prime
from src.multilinear.basis import ExponentVector, Multidegree
from src.multilinear.maps import eta_prime_rule, matrix_from_rule
from src.multilinear.sparse_matrix import FpSparseMatrix
from src.schur.hook_module import HookModule, build_hook_module
from src.schur.shapes import HookShape


@dataclass(frozen=True)
class FrobeniusSubquotient:
    module: HookModule
    # Positions in module.reduced_basis kept in the quotient
    kept: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.kept)

    @property
    def gradings(self) -> Tuple[ExponentVector, ...]:
        reduced = self.module.reduced_gradings
        return tuple(reduced[k] for k in self.kept)

    def character(self) -> MultiPoly:
        return MultiPoly.from_monomials(self.module.n, self.gradings)

    def project(self, reduced_coords: np.ndarray) -> np.ndarray:
        """Image in S^p of a vector given in the module's reduced coordinates."""
        return np.asarray(reduced_coords, dtype=np.int64)[list(self.kept)]


def frobenius_subquotient(module: HookModule) -> FrobeniusSubquotient:
    p = module.p
    kept = tuple(
        k
        for k, mu in enumerate(module.reduced_gradings)
        if Multidegree(mu).divisible_by(p)
    )
    return FrobeniusSubquotient(module, kept)


@dataclass(frozen=True)
class EtaIsomorphism:
    source: HookModule
    target: FrobeniusSubquotient
    # dim S^p target x dim source, on reduced coordinates
    matrix: FpSparseMatrix
    # eta' sends the source relations into the target relations
    descends: bool

    def apply(self, source_coords: np.ndarray) -> np.ndarray:
        return self.matrix.apply(np.asarray(source_coords, dtype=np.int64))


def eta_isomorphism(source: HookModule, target: HookModule) -> EtaIsomorphism:
    """
    eta: S_(a,1^b)(V) -> S^p_(p(a+b)-b,1^b)(V), induced by
    v_I (x) v^alpha -> v_I (x) v^{p alpha + (p-1) 1_I}.

    Raises InvariantViolation if the induced map is not bijective.
    """
    p = source.p
    if target.prime != source.prime or target.n != source.n:
        raise PreconditionError("eta needs both modules over the same V and F_p")
    same_leg = target.shape.leg == source.shape.leg
    if not same_leg or target.shape.size != p * source.shape.size:
        raise PreconditionError(
            f"eta maps S_{source.shape} to S^p of a shape with the same leg and "
            f"size {p * source.shape.size}, got {target.shape}"
        )

    eta_ambient = matrix_from_rule(
        source.ambient, target.ambient, eta_prime_rule(p), source.prime
    )
    subquotient = frobenius_subquotient(target)

    kept = set(subquotient.kept)
    columns = []
    for position in source.reduced_basis:
        image = target.coordinates(eta_ambient.apply(source.unit_vector(position)))
        dropped = [k for k, v in enumerate(image) if v and k not in kept]
        if dropped:
            raise InvariantViolation(
                "eta produced components of non-p-divisible multidegree"
            )
        projected = subquotient.project(image)
        columns.append({r: int(v) for r, v in enumerate(projected) if v})
    matrix = FpSparseMatrix.from_columns(subquotient.dimension, columns, source.prime)

    descends = all(
        not target.reduce(eta_ambient.apply(relation)).any()
        for relation in (
            _column_vector(source.presentation, c)
            for c in range(source.presentation.cols)
        )
    )

    if not (
        matrix.rows == matrix.cols == source.dimension and matrix.rank() == matrix.rows
    ):
        raise InvariantViolation(
            f"eta is not bijective: {source.dimension} -> {subquotient.dimension}, "
            f"rank {matrix.rank()}"
        )
    return EtaIsomorphism(source, subquotient, matrix, descends)


def eta_isomorphism_for(i: int, m: int, n: int, prime: Prime) -> EtaIsomorphism:
    """eta for source (m/p - i, 1^i) and target (m - i, 1^i)."""
    if not prime.divides(m):
        raise PreconditionError(f"p must divide m, got m={m}, p={prime}")
    source = build_hook_module(HookShape(m // prime.value - i, i), n, prime)
    target = build_hook_module(HookShape(m - i, i), n, prime)
    return eta_isomorphism(source, target)


def _column_vector(matrix: FpSparseMatrix, c: int) -> np.ndarray:
    x = np.zeros(matrix.rows, dtype=np.int64)
    for r, value in matrix.column(c).items():
        x[r] = value
    return x
