"""
The structural maps between tensor spaces Lambda^i V (x) S_j V, as sparse
matrices over F_p in the canonical bases.

Sign conventions:
- wedging v_k onto v_I from the right puts it in sorted position with sign
  (-1)^{#{l in I : l > k}}
- kappa removes k from v_I with sign (-1)^{pos(k) - 1} (left contraction)
- the homotopy on L_m contracts from the right, sign (-1)^{#{l in I : l > k}}
"""

from typing import Callable, Dict, Iterable, List, Optional, Tuple

from src.exceptions import PreconditionError
from src.ffield.field import Prime
from src.multilinear.basis import (
    BasisTensor,
    TensorSpaceBasis,
    enumerate_basis,
    relabel_without,
)
from src.multilinear.sparse_matrix import FpSparseMatrix

Term = Tuple[BasisTensor, int]
Rule = Callable[[BasisTensor], Iterable[Term]]
# (sorted index set, sign)
Signed = Tuple[Tuple[int, ...], int]


def wedge_right(index_set: Tuple[int, ...], k: int) -> Optional[Signed]:
    """v_I ^ v_k as (sorted index set, sign), or None when k is in I."""
    if k in index_set:
        return None
    greater = sum(1 for i in index_set if i > k)
    merged = tuple(sorted(index_set + (k,)))
    return merged, (-1) ** greater


def wedge_left(k: int, index_set: Tuple[int, ...]) -> Optional[Signed]:
    """v_k ^ v_I as (sorted index set, sign), or None when k is in I."""
    if k in index_set:
        return None
    smaller = sum(1 for i in index_set if i < k)
    merged = tuple(sorted(index_set + (k,)))
    return merged, (-1) ** smaller


def _bump(exponents: Tuple[int, ...], k: int, delta: int) -> Tuple[int, ...]:
    return exponents[: k - 1] + (exponents[k - 1] + delta,) + exponents[k:]


def matrix_from_rule(
    source: TensorSpaceBasis,
    target: TensorSpaceBasis,
    rule: Rule,
    prime: Prime,
) -> FpSparseMatrix:
    """Matrix whose column c holds rule(source[c]) in target coordinates.

    Terms landing outside the target basis must have zero coefficient mod p;
    anything else is a bug in the rule and raises KeyError.
    """
    p = prime.value
    entries: Dict[Tuple[int, int], int] = {}
    for c, t in enumerate(source):
        for image, coefficient in rule(t):
            if coefficient % p == 0:
                continue
            r = target.position(image)
            entries[(r, c)] = entries.get((r, c), 0) + coefficient
    return FpSparseMatrix(len(target), len(source), prime, entries)


# ---------------------------
# phi and its restriction to L_m
# ---------------------------


def _phi_rule(skip: Optional[int] = None) -> Rule:
    def rule(t: BasisTensor) -> List[Term]:
        terms = []
        for k, a_k in enumerate(t.exponents, start=1):
            if a_k == 0 or k == skip:
                continue
            wedged = wedge_right(t.index_set, k)
            if wedged is None:
                continue
            index_set, sign = wedged
            terms.append(
                (BasisTensor(index_set, _bump(t.exponents, k, -1)), sign * a_k)
            )
        return terms

    return rule


def phi_on(
    source: TensorSpaceBasis,
    target: TensorSpaceBasis,
    prime: Prime,
    skip: Optional[int] = None,
) -> FpSparseMatrix:
    """phi between explicit bases; skip=ell drops the v_ell term (L_m)."""
    return matrix_from_rule(source, target, _phi_rule(skip), prime)


def phi_matrix(n: int, i: int, j: int, p: Prime) -> FpSparseMatrix:
    """phi: Lambda^i (x) S_j -> Lambda^{i+1} (x) S_{j-1}."""
    return phi_on(enumerate_basis(n, i, j), enumerate_basis(n, i + 1, j - 1), p)


# ---------------------------
# Koszul contraction and the homotopy
# ---------------------------


def _contraction_rule(from_right: bool) -> Rule:
    def rule(t: BasisTensor) -> List[Term]:
        terms = []
        size = len(t.index_set)
        for pos, k in enumerate(t.index_set):
            exponent = size - 1 - pos if from_right else pos
            rest = t.index_set[:pos] + t.index_set[pos + 1 :]
            terms.append(
                (BasisTensor(rest, _bump(t.exponents, k, 1)), (-1) ** exponent)
            )
        return terms

    return rule


def kappa_on(
    source: TensorSpaceBasis, target: TensorSpaceBasis, prime: Prime
) -> FpSparseMatrix:
    return matrix_from_rule(source, target, _contraction_rule(False), prime)


def kappa_matrix(n: int, b: int, a: int, p: Prime) -> FpSparseMatrix:
    """kappa_{a,b}: Lambda^b (x) S_a -> Lambda^{b-1} (x) S_{a+1}."""
    return kappa_on(enumerate_basis(n, b, a), enumerate_basis(n, b - 1, a + 1), p)


def homotopy_on(
    source: TensorSpaceBasis, target: TensorSpaceBasis, prime: Prime
) -> FpSparseMatrix:
    """Multiplication by s in (V')^* (x) V: right contraction of the wedge factor."""
    return matrix_from_rule(source, target, _contraction_rule(True), prime)


def homotopy_ell_on(
    source: TensorSpaceBasis, target: TensorSpaceBasis, ell: int, prime: Prime
) -> FpSparseMatrix:
    """h_ell = v_ell ^ h(iota_ell x) on Lambda^{i+1} V (x) S_j V.

    Tensors without v_ell go to zero; on v_ell ^ L_m this is v_ell ^ h.
    """
    contract = _contraction_rule(True)

    def rule(t: BasisTensor) -> List[Term]:
        if ell not in t.index_set:
            return []
        rest = tuple(k for k in t.index_set if k != ell)
        _, sign = wedge_left(ell, rest)
        terms = []
        for image, coefficient in contract(BasisTensor(rest, t.exponents)):
            index_set, wedge_sign = wedge_left(ell, image.index_set)
            terms.append(
                (
                    BasisTensor(index_set, image.exponents),
                    sign * wedge_sign * coefficient,
                )
            )
        return terms

    return matrix_from_rule(source, target, rule, prime)


# ---------------------------
# Frobenius-type maps
# ---------------------------


def eta_prime_rule(p: int) -> Rule:
    """v_I (x) v^alpha -> v_I (x) v^{p alpha + (p-1) 1_I}."""

    def rule(t: BasisTensor) -> List[Term]:
        members = set(t.index_set)
        exponents = tuple(
            p * e + ((p - 1) if k in members else 0)
            for k, e in enumerate(t.exponents, start=1)
        )
        return [(BasisTensor(t.index_set, exponents), 1)]

    return rule


def eta_prime_matrix(n: int, i: int, j: int, p: Prime) -> FpSparseMatrix:
    """Lambda^i (x) S_j -> Lambda^i (x) S_{pj + (p-1)i}, one 1 per column."""
    q = p.value
    source = enumerate_basis(n, i, j)
    target = enumerate_basis(n, i, q * j + (q - 1) * i)
    return matrix_from_rule(source, target, eta_prime_rule(q), p)


def frobenius_power_map(n: int, i: int, m: int, p: Prime) -> FpSparseMatrix:
    """Formal Frobenius F^m: S_i(V) -> S_{im}(V), v^alpha -> v^{m alpha}."""
    if m < 1:
        raise PreconditionError(f"Frobenius power needs m >= 1, got {m}")
    source = enumerate_basis(n, 0, i)
    target = enumerate_basis(n, 0, i * m)

    def rule(t: BasisTensor) -> List[Term]:
        return [(BasisTensor((), tuple(m * e for e in t.exponents)), 1)]

    return matrix_from_rule(source, target, rule, p)


# ---------------------------
# Maps tying V, V' = V / k v_ell and L_m together
# ---------------------------


def wedge_ell_on(
    source: TensorSpaceBasis, target: TensorSpaceBasis, ell: int, prime: Prime
) -> FpSparseMatrix:
    """v_ell ^ - : Lambda^i V' (x) S_j V -> Lambda^{i+1} V (x) S_j V."""

    def rule(t: BasisTensor) -> List[Term]:
        wedged = wedge_left(ell, t.index_set)
        if wedged is None:
            return []
        index_set, sign = wedged
        return [(BasisTensor(index_set, t.exponents), sign)]

    return matrix_from_rule(source, target, rule, prime)


def projection_on(
    source: TensorSpaceBasis, target: TensorSpaceBasis, ell: int, prime: Prime
) -> FpSparseMatrix:
    """The map induced by V -> V', renumbering variables past ell."""

    def rule(t: BasisTensor) -> List[Term]:
        image = relabel_without(t, ell)
        return [] if image is None else [(image, 1)]

    return matrix_from_rule(source, target, rule, prime)
