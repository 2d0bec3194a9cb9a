"""
Dense Gaussian elimination over F_p on numpy int64 arrays.

Entries are kept in [0, p). Products of two residues must fit in int64,
which holds for every prime this package accepts at desk scale.
"""

from typing import List, Tuple

import numpy as np

from src.exceptions import PreconditionError


def as_residues(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def row_reduce(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form mod p.

    Args:
        a: Matrix (m x n) with integer entries.
        p: Prime modulus.

    Returns:
        (R, pivot_cols):
            R - the RREF with zero rows dropped, shape (rank, n).
            pivot_cols - pivot column of each row of R.
    """
    r = as_residues(a, p).copy()
    if r.ndim != 2:
        raise PreconditionError(f"expected a 2-d array, got shape {r.shape}")
    rows, cols = r.shape
    pivots: List[int] = []
    pivot_row = 0

    for col in range(cols):
        if pivot_row == rows:
            break
        nonzero = np.nonzero(r[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            r[[pivot_row, found]] = r[[found, pivot_row]]

        inv = pow(int(r[pivot_row, col]), -1, p)
        r[pivot_row] = (r[pivot_row] * inv) % p

        # Clear the column above and below the pivot
        factors = r[:, col].copy()
        factors[pivot_row] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            r[hit] = (r[hit] - np.outer(factors[hit], r[pivot_row])) % p

        pivots.append(col)
        pivot_row += 1

    return r[:pivot_row], pivots


def rank(a: np.ndarray, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(row_reduce(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : a x = 0} as the columns of the returned (n x k) array."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0 or a.size == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = row_reduce(a, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-r[row, f]) % p
    return basis


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the image of a, chosen among its own columns."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=np.int64)
    _, pivots = row_reduce(a, p)
    return as_residues(a[:, pivots], p)


def independent_modulo(
    candidates: np.ndarray, span: np.ndarray, p: int
) -> List[int]:
    """Indices of candidate columns that extend the span one at a time."""
    chosen: List[int] = []
    current = as_residues(span, p)
    current_rank = rank(current, p) if current.size else 0
    for k in range(candidates.shape[1]):
        trial = np.hstack([current, candidates[:, k : k + 1] % p])
        trial_rank = rank(trial, p)
        if trial_rank > current_rank:
            chosen.append(k)
            current, current_rank = trial, trial_rank
    return chosen
