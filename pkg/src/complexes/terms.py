"""
Terms of a complex: a hook module (coset coordinates) or a raw tensor space
(basis-tensor coordinates).
"""

from typing import Protocol, Tuple, runtime_checkable

from src.characters.multipoly import MultiPoly
from src.multilinear.basis import ExponentVector, TensorSpaceBasis


@runtime_checkable
class ComplexTerm(Protocol):
    @property
    def dimension(self) -> int: ...

    @property
    def reduced_gradings(self) -> Tuple[ExponentVector, ...]: ...

    def character(self) -> MultiPoly: ...


class RawTerm:
    """A span of basis tensors, used as-is with no relations."""

    def __init__(self, basis: TensorSpaceBasis):
        self.basis = basis
        self.n = basis.n
        self._gradings = basis.multidegrees()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def reduced_gradings(self) -> Tuple[ExponentVector, ...]:
        return self._gradings

    def character(self) -> MultiPoly:
        return MultiPoly.from_monomials(self.n, self._gradings)

    def __repr__(self) -> str:
        return (
            f"RawTerm(Lambda^{self.basis.wedge_degree} (x) S_{self.basis.sym_degree}, "
            f"n={self.n}, dim={self.dimension})"
        )
