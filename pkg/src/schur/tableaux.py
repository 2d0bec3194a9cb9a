"""
Brute-force semistandard tableaux of hook shape.

This is the independent oracle for hook module dimensions and characters:
it never touches the linear algebra used to build the modules.
"""

from itertools import combinations, combinations_with_replacement
from typing import Iterator, List, Tuple

from src.schur.shapes import HookShape

# (first row, rest of first column)
HookTableau = Tuple[Tuple[int, ...], Tuple[int, ...]]


def semistandard_tableaux(shape: HookShape, n: int) -> Iterator[HookTableau]:
    """Rows weakly increasing, first column strictly increasing, entries in [1, n]."""
    if shape.is_degenerate or n < 1:
        return
    for corner in range(1, n + 1):
        row_choices = combinations_with_replacement(range(corner, n + 1), shape.arm - 1)
        for row_rest in row_choices:
            for column_rest in combinations(range(corner + 1, n + 1), shape.leg):
                yield (corner,) + row_rest, column_rest


def tableau_count(shape: HookShape, n: int) -> int:
    return sum(1 for _ in semistandard_tableaux(shape, n))


def tableau_content(tableau: HookTableau, n: int) -> Tuple[int, ...]:
    """Exponent vector counting how often each of 1..n appears."""
    counts: List[int] = [0] * n
    row, column_rest = tableau
    for entry in row + column_rest:
        counts[entry - 1] += 1
    return tuple(counts)
