"""
Canonical bases of the tensor spaces Lambda^i V (x) S_j V.

A basis tensor v_I (x) v^alpha is stored as the strictly increasing index set
I (1-based) and the exponent vector alpha. Bases are ordered
lexicographically on I and then on alpha with v_1 largest, so for n = 2 the
exponents of degree 1 come as (1, 0), (0, 1).
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, Optional, Sequence, Tuple

from src.exceptions import PreconditionError, SizeLimitError
from src.ffield.field import binomial

ExponentVector = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class BasisTensor:
    index_set: Tuple[int, ...]
    exponents: ExponentVector

    def __post_init__(self):
        n = len(self.exponents)
        if any(b <= a for a, b in zip(self.index_set, self.index_set[1:])):
            raise PreconditionError(f"index set {self.index_set} is not increasing")
        if self.index_set and not (1 <= self.index_set[0] and self.index_set[-1] <= n):
            raise PreconditionError(f"index set {self.index_set} outside [1, {n}]")
        if any(e < 0 for e in self.exponents):
            raise PreconditionError(f"negative exponent in {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def wedge_degree(self) -> int:
        return len(self.index_set)

    @property
    def sym_degree(self) -> int:
        return sum(self.exponents)

    @property
    def total_degree(self) -> int:
        return self.wedge_degree + self.sym_degree

    def __str__(self) -> str:
        wedge = "^".join(f"v{k}" for k in self.index_set) or "1"
        sym = "*".join(
            f"v{k}^{e}" if e > 1 else f"v{k}"
            for k, e in enumerate(self.exponents, start=1)
            if e
        )
        return f"{wedge} (x) {sym or '1'}"


@dataclass(frozen=True)
class Multidegree:
    """Torus weight alpha + 1_I of a basis tensor."""

    exponents: ExponentVector

    def divisible_by(self, p: int) -> bool:
        return all(e % p == 0 for e in self.exponents)


def multidegree(t: BasisTensor) -> Multidegree:
    members = set(t.index_set)
    return Multidegree(
        tuple(
            e + (1 if k in members else 0)
            for k, e in enumerate(t.exponents, start=1)
        )
    )


def exponent_vectors(n: int, degree: int) -> Iterator[ExponentVector]:
    """All alpha with |alpha| = degree, v_1-heaviest first."""
    if degree < 0:
        return
    if n == 0:
        if degree == 0:
            yield ()
        return
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in exponent_vectors(n - 1, degree - first):
            yield (first,) + rest


def basis_size(n: int, i: int, j: int) -> int:
    """C(n, i) * C(n + j - 1, j), the closed form of dim Lambda^i (x) S_j."""
    if i < 0 or j < 0 or i > n:
        return 0
    if n == 0:
        return 1 if (i == 0 and j == 0) else 0
    return binomial(n, i) * binomial(n + j - 1, j)


@dataclass(frozen=True)
class TensorSpaceBasis:
    n: int
    wedge_degree: int
    sym_degree: int
    elements: Tuple[BasisTensor, ...]
    _positions: Dict[BasisTensor, int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        object.__setattr__(
            self, "_positions", {t: k for k, t in enumerate(self.elements)}
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[BasisTensor]:
        return iter(self.elements)

    def __getitem__(self, k: int) -> BasisTensor:
        return self.elements[k]

    def __contains__(self, t: BasisTensor) -> bool:
        return t in self._positions

    def position(self, t: BasisTensor) -> int:
        return self._positions[t]

    def multidegrees(self) -> Tuple[ExponentVector, ...]:
        return tuple(multidegree(t).exponents for t in self.elements)

    def avoiding(self, ell: int) -> "TensorSpaceBasis":
        """Sub-basis Lambda^i V' (x) S_j V with V' spanned by v_k, k != ell."""
        kept = tuple(t for t in self.elements if ell not in t.index_set)
        return TensorSpaceBasis(self.n, self.wedge_degree, self.sym_degree, kept)

    @classmethod
    def empty(cls, n: int, i: int, j: int) -> "TensorSpaceBasis":
        return cls(n, i, j, ())


def enumerate_basis(
    n: int, i: int, j: int, max_dim: Optional[int] = None
) -> TensorSpaceBasis:
    """
    The canonical ordered basis of Lambda^i V (x) S_j V with dim V = n.

    Wedge degree above n (or a negative degree) gives the empty basis.
    """
    if n < 0:
        raise PreconditionError(f"dimension n must be >= 0, got {n}")
    if i < 0 or j < 0 or i > n:
        return TensorSpaceBasis.empty(n, i, j)

    size = basis_size(n, i, j)
    if max_dim is not None and size > max_dim:
        raise SizeLimitError(size, max_dim, f"Lambda^{i} (x) S_{j} at n={n}")

    monomials = list(exponent_vectors(n, j))
    elements = tuple(
        BasisTensor(index_set, alpha)
        for index_set in combinations(range(1, n + 1), i)
        for alpha in monomials
    )
    return TensorSpaceBasis(n, i, j, elements)


def relabel_without(t: BasisTensor, ell: int) -> Optional[BasisTensor]:
    """Image of t under V -> V/k v_ell, renumbered to n - 1 variables."""
    if ell in t.index_set or t.exponents[ell - 1]:
        return None
    index_set = tuple(k if k < ell else k - 1 for k in t.index_set)
    exponents = t.exponents[: ell - 1] + t.exponents[ell:]
    return BasisTensor(index_set, exponents)


def grade_positions(
    gradings: Sequence[ExponentVector],
) -> Dict[ExponentVector, list]:
    """Group coordinate positions by multidegree, in first-seen order."""
    blocks: Dict[ExponentVector, list] = {}
    for k, mu in enumerate(gradings):
        blocks.setdefault(mu, []).append(k)
    return blocks
