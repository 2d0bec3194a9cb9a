from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

import numpy as np

from src.config import get_limits
from src.exceptions import PreconditionError, SizeLimitError
from src.ffield.field import FpElement, Prime
from src.multilinear import linalg

Entry = Tuple[int, int]


@dataclass(frozen=True)
class FpSparseMatrix:
    """
    Immutable sparse matrix over F_p.

    Entries are stored as residues in [0, p) keyed by (row, col); zero
    entries are never stored. Exact rank, kernel and image are computed by
    dense elimination after materialization.
    """

    rows: int
    cols: int
    prime: Prime
    entries: Mapping[Entry, int] = field(default_factory=dict)

    def __post_init__(self):
        p = self.prime.value
        cleaned: Dict[Entry, int] = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise PreconditionError(
                    f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix"
                )
            residue = int(value) % p
            if residue:
                cleaned[(r, c)] = residue
        object.__setattr__(self, "entries", cleaned)

    # ---------------------------
    # Construction
    # ---------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, prime: Prime) -> "FpSparseMatrix":
        return cls(rows, cols, prime, {})

    @classmethod
    def identity(cls, size: int, prime: Prime) -> "FpSparseMatrix":
        return cls(size, size, prime, {(k, k): 1 for k in range(size)})

    @classmethod
    def from_dense(cls, array, prime: Prime) -> "FpSparseMatrix":
        a = linalg.as_residues(array, prime.value)
        if a.ndim != 2:
            raise PreconditionError(f"expected a 2-d array, got shape {a.shape}")
        rows, cols = np.nonzero(a)
        return cls(
            a.shape[0],
            a.shape[1],
            prime,
            {(int(r), int(c)): int(a[r, c]) for r, c in zip(rows, cols)},
        )

    @classmethod
    def from_columns(
        cls, rows: int, columns: Iterable[Mapping[int, int]], prime: Prime
    ) -> "FpSparseMatrix":
        entries: Dict[Entry, int] = {}
        cols = 0
        for c, column in enumerate(columns):
            cols = c + 1
            for r, value in column.items():
                entries[(r, c)] = entries.get((r, c), 0) + value
        return cls(rows, cols, prime, entries)

    # ---------------------------
    # Access
    # ---------------------------

    @property
    def p(self) -> int:
        return self.prime.value

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def entry(self, r: int, c: int) -> FpElement:
        return FpElement(self.entries.get((r, c), 0), self.prime)

    def items(self) -> Iterator[Tuple[Entry, int]]:
        return iter(sorted(self.entries.items()))

    def column(self, c: int) -> Dict[int, int]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_dense(self, max_dim: Optional[int] = None) -> np.ndarray:
        limit = max_dim if max_dim is not None else get_limits().max_dim
        if max(self.rows, self.cols) > limit:
            raise SizeLimitError(max(self.rows, self.cols), limit, "matrix side")
        a = np.zeros((self.rows, self.cols), dtype=np.int64)
        for (r, c), value in self.entries.items():
            a[r, c] = value
        return a

    # ---------------------------
    # Algebra
    # ---------------------------

    def _check_prime(self, other: "FpSparseMatrix"):
        if other.prime != self.prime:
            raise PreconditionError(
                f"cannot combine matrices over F_{self.p} and F_{other.p}"
            )

    def __matmul__(self, other: "FpSparseMatrix") -> "FpSparseMatrix":
        self._check_prime(other)
        if self.cols != other.rows:
            raise PreconditionError(
                f"shape mismatch: {self.shape} @ {other.shape}"
            )
        by_row: Dict[int, List[Tuple[int, int]]] = {}
        for (r, c), value in other.entries.items():
            by_row.setdefault(r, []).append((c, value))
        product: Dict[Entry, int] = {}
        for (r, k), left in self.entries.items():
            for c, right in by_row.get(k, ()):
                product[(r, c)] = (product.get((r, c), 0) + left * right) % self.p
        return FpSparseMatrix(self.rows, other.cols, self.prime, product)

    def __add__(self, other: "FpSparseMatrix") -> "FpSparseMatrix":
        self._check_prime(other)
        if self.shape != other.shape:
            raise PreconditionError(f"shape mismatch: {self.shape} + {other.shape}")
        total = dict(self.entries)
        for key, value in other.entries.items():
            total[key] = total.get(key, 0) + value
        return FpSparseMatrix(self.rows, self.cols, self.prime, total)

    def __neg__(self) -> "FpSparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "FpSparseMatrix") -> "FpSparseMatrix":
        return self + (-other)

    def scale(self, factor: int) -> "FpSparseMatrix":
        return FpSparseMatrix(
            self.rows,
            self.cols,
            self.prime,
            {key: value * factor for key, value in self.entries.items()},
        )

    def transpose(self) -> "FpSparseMatrix":
        return FpSparseMatrix(
            self.cols,
            self.rows,
            self.prime,
            {(c, r): value for (r, c), value in self.entries.items()},
        )

    def submatrix(self, rows: List[int], cols: List[int]) -> "FpSparseMatrix":
        row_index = {r: k for k, r in enumerate(rows)}
        col_index = {c: k for k, c in enumerate(cols)}
        return FpSparseMatrix(
            len(rows),
            len(cols),
            self.prime,
            {
                (row_index[r], col_index[c]): value
                for (r, c), value in self.entries.items()
                if r in row_index and c in col_index
            },
        )

    def with_entry(self, r: int, c: int, value: int) -> "FpSparseMatrix":
        """Copy with one entry overwritten."""
        entries = dict(self.entries)
        entries[(r, c)] = value
        return FpSparseMatrix(self.rows, self.cols, self.prime, entries)

    def apply(self, vector: np.ndarray) -> np.ndarray:
        out = np.zeros(self.rows, dtype=np.int64)
        for (r, c), value in self.entries.items():
            if vector[c]:
                out[r] = (out[r] + value * int(vector[c])) % self.p
        return out

    # ---------------------------
    # Exact linear algebra
    # ---------------------------

    def rank(self) -> int:
        if self.is_zero():
            return 0
        return linalg.rank(self.to_dense(), self.p)

    def kernel_basis(self) -> np.ndarray:
        """Columns spanning {x : Mx = 0}."""
        return linalg.nullspace(self.to_dense(), self.p)

    def image_basis(self) -> np.ndarray:
        """Columns of M forming a basis of its column space."""
        return linalg.column_space(self.to_dense(), self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpSparseMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.prime == other.prime
            and self.entries == other.entries
        )

    __hash__ = None
