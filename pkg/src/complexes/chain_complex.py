from dataclasses import dataclass, replace
from typing import List, Literal, Optional, Tuple

from src.complexes.terms import ComplexTerm
from src.exceptions import PreconditionError
from src.ffield.field import Prime
from src.multilinear.graded import block_ranks
from src.multilinear.sparse_matrix import FpSparseMatrix

ComplexKind = Literal["N", "L"]


@dataclass(frozen=True)
class ChainComplexFp:
    """
    Cochain complex 0 -> T_0 -> T_1 -> ... -> T_{m-1} -> 0 over F_p.

    differentials[i] maps T_i to T_{i+1} in the terms' own coordinates.
    For L_m, `augmentation` is the column of span(v_ell^{m-1}) inside T_0.
    """

    terms: Tuple[ComplexTerm, ...]
    differentials: Tuple[FpSparseMatrix, ...]
    prime: Prime
    m: int
    n: int
    kind: ComplexKind = "N"
    ell: Optional[int] = None
    augmentation: Optional[FpSparseMatrix] = None

    def __post_init__(self):
        if len(self.differentials) != max(len(self.terms) - 1, 0):
            raise PreconditionError(
                f"{len(self.terms)} terms need {len(self.terms) - 1} differentials, "
                f"got {len(self.differentials)}"
            )
        for i, d in enumerate(self.differentials):
            expected = (self.terms[i + 1].dimension, self.terms[i].dimension)
            if d.shape != expected:
                raise PreconditionError(
                    f"differential {i} has shape {d.shape}, expected {expected}"
                )
        if self.augmentation is not None and self.terms:
            if self.augmentation.rows != self.terms[0].dimension:
                raise PreconditionError("augmentation does not land in degree 0")

    @property
    def p(self) -> int:
        return self.prime.value

    @property
    def length(self) -> int:
        return len(self.terms)

    def dimensions(self) -> List[int]:
        return [t.dimension for t in self.terms]

    def differential(self, i: int) -> FpSparseMatrix:
        """d_i : T_i -> T_{i+1}; zero out of the last term."""
        if 0 <= i < len(self.differentials):
            return self.differentials[i]
        if i == self.length - 1:
            return FpSparseMatrix.zeros(0, self.terms[i].dimension, self.prime)
        raise PreconditionError(f"no term in degree {i}")

    def incoming(self, i: int) -> FpSparseMatrix:
        """d_{i-1} : T_{i-1} -> T_i; zero into degree 0."""
        if i == 0:
            return FpSparseMatrix.zeros(self.terms[0].dimension, 0, self.prime)
        return self.differential(i - 1)

    def differential_ranks(self) -> List[int]:
        ranks = []
        for i, d in enumerate(self.differentials):
            blocks = block_ranks(
                d, self.terms[i + 1].reduced_gradings, self.terms[i].reduced_gradings
            )
            ranks.append(sum(blocks.values()))
        return ranks

    def d_squared_zero(self) -> bool:
        composites = [
            self.differentials[i + 1] @ self.differentials[i]
            for i in range(len(self.differentials) - 1)
        ]
        if self.augmentation is not None and self.differentials:
            composites.append(self.differentials[0] @ self.augmentation)
        return all(c.is_zero() for c in composites)

    def euler_number(self) -> int:
        return sum((-1) ** i * t.dimension for i, t in enumerate(self.terms))


def corrupt_differential(
    c: ChainComplexFp, degree: int, row: int, col: int, delta: int = 1
) -> ChainComplexFp:
    """A copy of c with one differential entry shifted by delta."""
    d = c.differential(degree)
    value = int(d.entry(row, col)) + delta
    differentials = list(c.differentials)
    differentials[degree] = d.with_entry(row, col, value)
    return replace(c, differentials=tuple(differentials))
