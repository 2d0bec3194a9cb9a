"""
Action of a matrix g in GL_n(F_p) on Lambda^i V (x) S_j V.

g acts on the basis by v_k -> sum_r g[r, k] v_r and is extended
multiplicatively to wedges and monomials.
"""

from typing import Dict, Tuple

import numpy as np

from src.ffield.field import Prime
from src.multilinear.basis import BasisTensor, TensorSpaceBasis
from src.multilinear.maps import wedge_right
from src.multilinear.sparse_matrix import FpSparseMatrix


def _act_on_wedge(
    index_set: Tuple[int, ...], g: np.ndarray, p: int
) -> Dict[Tuple[int, ...], int]:
    current: Dict[Tuple[int, ...], int] = {(): 1}
    n = g.shape[0]
    for k in index_set:
        nxt: Dict[Tuple[int, ...], int] = {}
        for wedge, coefficient in current.items():
            for r in range(1, n + 1):
                g_rk = int(g[r - 1, k - 1])
                if g_rk == 0:
                    continue
                wedged = wedge_right(wedge, r)
                if wedged is None:
                    continue
                merged, sign = wedged
                nxt[merged] = (nxt.get(merged, 0) + sign * g_rk * coefficient) % p
        current = {w: c for w, c in nxt.items() if c}
    return current


def _act_on_monomial(
    exponents: Tuple[int, ...], g: np.ndarray, p: int
) -> Dict[Tuple[int, ...], int]:
    n = len(exponents)
    current: Dict[Tuple[int, ...], int] = {(0,) * n: 1}
    for k, power in enumerate(exponents, start=1):
        for _ in range(power):
            nxt: Dict[Tuple[int, ...], int] = {}
            for mono, coefficient in current.items():
                for r in range(1, n + 1):
                    g_rk = int(g[r - 1, k - 1])
                    if g_rk == 0:
                        continue
                    bumped = mono[: r - 1] + (mono[r - 1] + 1,) + mono[r:]
                    nxt[bumped] = (nxt.get(bumped, 0) + g_rk * coefficient) % p
            current = {m: c for m, c in nxt.items() if c}
    return current


def gl_action_matrix(
    basis: TensorSpaceBasis, g: np.ndarray, prime: Prime
) -> FpSparseMatrix:
    """Matrix of g acting on the span of a full tensor-space basis."""
    p = prime.value
    g = np.asarray(g, dtype=np.int64) % p
    entries: Dict[Tuple[int, int], int] = {}
    for c, t in enumerate(basis):
        wedges = _act_on_wedge(t.index_set, g, p)
        monomials = _act_on_monomial(t.exponents, g, p)
        for wedge, wc in wedges.items():
            for mono, mc in monomials.items():
                r = basis.position(BasisTensor(wedge, mono))
                entries[(r, c)] = (entries.get((r, c), 0) + wc * mc) % p
    return FpSparseMatrix(len(basis), len(basis), prime, entries)


def elementary_matrix(n: int, i: int, j: int, scalar: int, p: int) -> np.ndarray:
    """g with v_i -> v_i + scalar * v_j and every other basis vector fixed."""
    g = np.eye(n, dtype=np.int64)
    g[j - 1, i - 1] = scalar % p
    return g


def diagonal_matrix(scalars, p: int) -> np.ndarray:
    return np.diag(np.asarray(scalars, dtype=np.int64) % p)
