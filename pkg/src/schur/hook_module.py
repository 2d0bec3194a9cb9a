"""
Hook Schur modules S_(a,1^b)(V) over F_p.

S_(a,1^b)(V) is the cokernel of the Koszul contraction
    kappa: Lambda^{b+2} V (x) S_{a-2} V -> Lambda^{b+1} V (x) S_{a-1} V.
Coset representatives are the non-pivot ambient coordinates of the row-reduced
relations, taken block by block in multidegree.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from src.characters.multipoly import MultiPoly
from src.config import get_limits
from src.exceptions import InvariantViolation, PreconditionError
from src.ffield.field import Prime
from src.multilinear import linalg
from src.multilinear.action import gl_action_matrix
from src.multilinear.basis import ExponentVector, TensorSpaceBasis, enumerate_basis
from src.multilinear.graded import GradedReducer
from src.multilinear.maps import kappa_matrix, kappa_on
from src.multilinear.sparse_matrix import FpSparseMatrix
from src.schur.shapes import HookShape

logger = logging.getLogger(__name__)


class HookModule:
    def __init__(
        self,
        shape: HookShape,
        n: int,
        prime: Prime,
        ambient: TensorSpaceBasis,
        presentation: FpSparseMatrix,
    ):
        self.shape = shape
        self.n = n
        self.prime = prime
        self.ambient = ambient
        self.presentation = presentation
        self.gradings: Tuple[ExponentVector, ...] = ambient.multidegrees()
        self._reducer = GradedReducer(self.gradings, presentation)
        self.reduced_basis: Tuple[int, ...] = self._reducer.free_coords

    @property
    def dimension(self) -> int:
        return len(self.reduced_basis)

    @property
    def p(self) -> int:
        return self.prime.value

    @property
    def reduced_gradings(self) -> Tuple[ExponentVector, ...]:
        return tuple(self.gradings[k] for k in self.reduced_basis)

    def relation_rank(self) -> int:
        return self._reducer.rank

    # ---------------------------
    # Coordinates
    # ---------------------------

    def reduce(self, x: np.ndarray) -> np.ndarray:
        """Normal form of an ambient vector."""
        return self._reducer.reduce(x)

    def coordinates(self, x: np.ndarray) -> np.ndarray:
        """Coordinates of the coset x + relations in the reduced basis."""
        return self.reduce(x)[list(self.reduced_basis)]

    def element(self, x: np.ndarray) -> "SchurElement":
        return SchurElement(self, np.asarray(x, dtype=np.int64) % self.p)

    def unit_vector(self, position: int) -> np.ndarray:
        x = np.zeros(len(self.ambient), dtype=np.int64)
        x[position] = 1
        return x

    # ---------------------------
    # Induced maps
    # ---------------------------

    def induced_matrix(
        self, ambient_map: FpSparseMatrix, target: "HookModule"
    ) -> FpSparseMatrix:
        """Matrix on reduced coordinates of a map given on ambient spaces.

        The map is evaluated on the chosen representatives; whether it
        respects the relations is the caller's business.
        """
        if ambient_map.shape != (len(target.ambient), len(self.ambient)):
            raise PreconditionError(
                f"ambient map of shape {ambient_map.shape} does not fit "
                f"{len(self.ambient)} -> {len(target.ambient)}"
            )
        columns = []
        for position in self.reduced_basis:
            image = ambient_map.apply(self.unit_vector(position))
            coords = target.coordinates(image)
            columns.append({r: int(v) for r, v in enumerate(coords) if v})
        return FpSparseMatrix.from_columns(target.dimension, columns, self.prime)

    def action_matrix(self, g: np.ndarray) -> FpSparseMatrix:
        """rho(g) on reduced coordinates."""
        return self.induced_matrix(gl_action_matrix(self.ambient, g, self.prime), self)

    def character(self) -> MultiPoly:
        return MultiPoly.from_monomials(self.n, self.reduced_gradings)

    def __repr__(self) -> str:
        return (
            f"HookModule(shape={self.shape}, n={self.n}, p={self.p}, "
            f"dim={self.dimension})"
        )


@dataclass(eq=False)
class SchurElement:
    """A coset representative: an ambient vector modulo the relations."""

    module: HookModule
    coords: np.ndarray

    def normal_form(self) -> "SchurElement":
        return SchurElement(self.module, self.module.reduce(self.coords))

    def is_zero(self) -> bool:
        return not self.module.reduce(self.coords).any()

    def support_multidegrees(self) -> FrozenSet[ExponentVector]:
        """Multidegrees of the basis tensors in the normal form."""
        reduced = self.module.reduce(self.coords)
        return frozenset(self.module.gradings[k] for k in np.nonzero(reduced)[0])

    def __add__(self, other: "SchurElement") -> "SchurElement":
        if other.module is not self.module:
            return NotImplemented
        return SchurElement(self.module, (self.coords + other.coords) % self.module.p)

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        if other.module is not self.module:
            return NotImplemented
        return SchurElement(self.module, (self.coords - other.coords) % self.module.p)

    def __mul__(self, scalar: int) -> "SchurElement":
        return SchurElement(self.module, (self.coords * int(scalar)) % self.module.p)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurElement) or other.module is not self.module:
            return NotImplemented
        return (self - other).is_zero()


def build_hook_module(
    shape: HookShape, n: int, prime: Prime, max_dim: Optional[int] = None
) -> HookModule:
    """Realize S_(a,1^b)(V), dim V = n, as a cokernel over F_p."""
    if n < 1:
        raise PreconditionError(f"dimension n must be >= 1, got {n}")
    limit = max_dim if max_dim is not None else get_limits().max_dim
    a, b = shape.arm, shape.leg

    if shape.is_degenerate:
        ambient = TensorSpaceBasis.empty(n, b + 1, a - 1)
        relations_source = TensorSpaceBasis.empty(n, b + 2, a - 2)
    else:
        ambient = enumerate_basis(n, b + 1, a - 1, max_dim=limit)
        relations_source = enumerate_basis(n, b + 2, a - 2, max_dim=limit)

    presentation = kappa_on(relations_source, ambient, prime)
    module = HookModule(shape, n, prime, ambient, presentation)
    logger.debug(
        "built S_%s at n=%d, p=%d: ambient %d, relations rank %d, dim %d",
        shape,
        n,
        prime.value,
        len(ambient),
        module.relation_rank(),
        module.dimension,
    )
    return module


def normal_form(e: SchurElement) -> SchurElement:
    return e.normal_form()


def character(module: HookModule) -> MultiPoly:
    """Sum of x^mdeg over the reduced basis: the Schur polynomial s_(a,1^b)."""
    return module.character()


def tautological_koszul_check(shape: HookShape, n: int, prime: Prime) -> bool:
    """dim coker kappa_{a-2,b+2} = rank kappa_{a-1,b+1} = nullity kappa_{a,b}."""
    if shape.size < 1:
        raise PreconditionError("the Koszul realizations need |shape| >= 1")
    module = build_hook_module(shape, n, prime)
    a, b = shape.arm, shape.leg
    if shape.is_degenerate:
        return module.dimension == 0

    image_rank = kappa_matrix(n, b + 1, a - 1, prime).rank()
    kernel_source = kappa_matrix(n, b, a, prime)
    if kernel_source.cols == 0:
        nullity = 0
    elif kernel_source.rows == 0:
        nullity = kernel_source.cols
    else:
        nullity = linalg.nullspace(kernel_source.to_dense(), prime.value).shape[1]
    return module.dimension == image_rank == nullity


def straighten_exponent(e: SchurElement, j: int) -> Optional[int]:
    """
    Exponent of v_j in the multidegree of the normal form of a multigraded
    element; None when the element is zero in S_lambda(V).

    Straightening never changes multidegree, so every basis tensor in the
    normal form carries v_j with the same exponent as the input.
    """
    if not 1 <= j <= e.module.n:
        raise PreconditionError(f"j must be in [1, {e.module.n}], got {j}")
    nonzero = np.nonzero(np.asarray(e.coords) % e.module.p)[0]
    source = {e.module.gradings[k] for k in nonzero}
    if len(source) > 1:
        raise PreconditionError("element is not multigraded")
    support = e.support_multidegrees()
    if not support:
        return None
    if support != source:
        raise InvariantViolation("straightening changed the multidegree")
    (mu,) = support
    return mu[j - 1]
