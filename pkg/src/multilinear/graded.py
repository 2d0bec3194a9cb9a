"""
Linear algebra on multigraded coordinate spaces.

Every map in this package preserves multidegree, so subspaces spanned by
images of basis tensors split into blocks, one per multidegree. Working block
by block keeps the dense eliminations small.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.exceptions import InvariantViolation, PreconditionError
from src.ffield.field import Prime
from src.multilinear import linalg
from src.multilinear.basis import ExponentVector, grade_positions
from src.multilinear.sparse_matrix import FpSparseMatrix


@dataclass(frozen=True)
class _Block:
    coords: Tuple[int, ...]
    rref: np.ndarray
    pivots: Tuple[int, ...]


class GradedReducer:
    """
    Row-reduced spanning set of a multigraded subspace W of F_p^N.

    reduce(x) returns the unique representative of x + W supported on the
    non-pivot coordinates; those coordinates index a basis of F_p^N / W.
    """

    def __init__(
        self,
        gradings: Sequence[ExponentVector],
        generators: FpSparseMatrix,
    ):
        if generators.rows != len(gradings):
            raise PreconditionError(
                f"{generators.rows} generator rows for {len(gradings)} coordinates"
            )
        self.prime: Prime = generators.prime
        self.gradings = tuple(gradings)
        self.size = len(gradings)
        p = self.prime.value

        columns: Dict[int, Dict[int, int]] = {}
        for (r, c), value in generators.entries.items():
            columns.setdefault(c, {})[r] = value

        by_grade = grade_positions(self.gradings)
        block_columns: Dict[ExponentVector, List[Dict[int, int]]] = {}
        for column in columns.values():
            mu = self.gradings[next(iter(column))]
            if any(self.gradings[r] != mu for r in column):
                raise InvariantViolation("generator is not multigraded")
            block_columns.setdefault(mu, []).append(column)

        self._blocks: Dict[ExponentVector, _Block] = {}
        pivot_coords: List[int] = []
        for mu, cols in block_columns.items():
            coords = by_grade[mu]
            local = {c: k for k, c in enumerate(coords)}
            dense = np.zeros((len(cols), len(coords)), dtype=np.int64)
            for row, column in enumerate(cols):
                for r, value in column.items():
                    dense[row, local[r]] = value
            rref, pivots = linalg.row_reduce(dense, p)
            if not pivots:
                continue
            self._blocks[mu] = _Block(tuple(coords), rref, tuple(pivots))
            pivot_coords.extend(coords[k] for k in pivots)

        self.pivot_coords = frozenset(pivot_coords)
        self.free_coords = tuple(
            k for k in range(self.size) if k not in self.pivot_coords
        )

    @property
    def rank(self) -> int:
        return len(self.pivot_coords)

    def reduce(self, x: np.ndarray) -> np.ndarray:
        p = self.prime.value
        out = np.asarray(x, dtype=np.int64) % p
        for block in self._blocks.values():
            idx = list(block.coords)
            part = out[idx]
            if not part.any():
                continue
            for row, pivot in zip(block.rref, block.pivots):
                if part[pivot]:
                    part = (part - part[pivot] * row) % p
            out[idx] = part
        return out

    def contains(self, x: np.ndarray) -> bool:
        return not self.reduce(x).any()


def block_ranks(
    matrix: FpSparseMatrix,
    row_gradings: Sequence[ExponentVector],
    col_gradings: Sequence[ExponentVector],
) -> Dict[ExponentVector, int]:
    """Rank of a multidegree-preserving matrix on each source multidegree."""
    rows_by = grade_positions(row_gradings)
    ranks: Dict[ExponentVector, int] = {}
    for mu, cols in grade_positions(col_gradings).items():
        rows = rows_by.get(mu, [])
        if not rows:
            ranks[mu] = 0
            continue
        ranks[mu] = matrix.submatrix(rows, cols).rank()
    return ranks


def block_kernel(
    matrix: FpSparseMatrix,
    row_gradings: Sequence[ExponentVector],
    col_gradings: Sequence[ExponentVector],
) -> Dict[ExponentVector, np.ndarray]:
    """Kernel basis of each multidegree block, embedded in full coordinates."""
    rows_by = grade_positions(row_gradings)
    kernels: Dict[ExponentVector, np.ndarray] = {}
    for mu, cols in grade_positions(col_gradings).items():
        rows = rows_by.get(mu, [])
        if rows:
            local = linalg.nullspace(
                matrix.submatrix(rows, cols).to_dense(), matrix.p
            )
        else:
            local = np.eye(len(cols), dtype=np.int64)
        full = np.zeros((len(col_gradings), local.shape[1]), dtype=np.int64)
        full[cols, :] = local
        kernels[mu] = full
    return kernels


def block_image(
    matrix: FpSparseMatrix,
    row_gradings: Sequence[ExponentVector],
    col_gradings: Sequence[ExponentVector],
) -> Dict[ExponentVector, np.ndarray]:
    """Image basis of each multidegree block, embedded in target coordinates."""
    cols_by = grade_positions(col_gradings)
    images: Dict[ExponentVector, np.ndarray] = {}
    for mu, rows in grade_positions(row_gradings).items():
        cols = cols_by.get(mu, [])
        if not cols:
            local = np.zeros((len(rows), 0), dtype=np.int64)
        else:
            local = linalg.column_space(
                matrix.submatrix(rows, cols).to_dense(), matrix.p
            )
        full = np.zeros((len(row_gradings), local.shape[1]), dtype=np.int64)
        full[rows, :] = local
        images[mu] = full
    return images
