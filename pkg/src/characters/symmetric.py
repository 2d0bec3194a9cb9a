"""
Symmetric polynomials: power sums, Schur polynomials of hooks and the
alternating hook sum identity
    p_m = sum_{i=0}^{m-1} (-1)^i s_(m-i,1^i).
"""

from dataclasses import dataclass
from functools import lru_cache

from src.characters.multipoly import MultiPoly
from src.exceptions import PreconditionError
from src.schur.shapes import HookShape
from src.schur.tableaux import semistandard_tableaux, tableau_content

# Characters are independent of p; modules for them are built over F_2
REFERENCE_PRIME = 2


def power_sum(m: int, n: int) -> MultiPoly:
    """v_1^m + ... + v_n^m."""
    if m < 1:
        raise PreconditionError(f"power sum needs m >= 1, got {m}")
    total = MultiPoly.zero(n)
    for k in range(n):
        exponents = [0] * n
        exponents[k] = m
        total = total + MultiPoly.monomial(exponents)
    return total


def frobenius_scale(f: MultiPoly, p: int) -> MultiPoly:
    """Multiply every exponent vector by p."""
    if p < 1:
        raise PreconditionError(f"Frobenius scaling needs p >= 1, got {p}")
    return f.map_exponents(lambda e: tuple(p * x for x in e))


def schur_polynomial(shape: HookShape, n: int) -> MultiPoly:
    """s_(a,1^b)(v_1..v_n) summed over semistandard tableaux."""
    return MultiPoly.from_monomials(
        n, (tableau_content(t, n) for t in semistandard_tableaux(shape, n))
    )


@lru_cache(maxsize=256)
def hook_character(arm: int, leg: int, n: int, p: int = REFERENCE_PRIME) -> MultiPoly:
    """Character of the built module S_(arm,1^leg)(V) over F_p."""
    from src.ffield.field import Prime
    from src.schur.hook_module import build_hook_module

    if arm <= 0 or leg + 1 > n:
        return MultiPoly.zero(n)
    return build_hook_module(HookShape(arm, leg), n, Prime(p)).character()


def alternating_hook_sum(m: int, n: int) -> MultiPoly:
    """sum_{i=0}^{m-1} (-1)^i CH(S_(m-i,1^i)(V))."""
    total = MultiPoly.zero(n)
    for i in range(m):
        term = hook_character(m - i, i, n)
        total = total + term if i % 2 == 0 else total - term
    return total


@dataclass(frozen=True)
class IdentityResult:
    m: int
    n: int
    residual: MultiPoly

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()


def verify_power_sum_identity(m: int, n: int) -> IdentityResult:
    """Residual sum (-1)^i s_(m-i,1^i) - p_m; zero when the identity holds."""
    if m < 1 or n < 1:
        raise PreconditionError(f"identity needs m, n >= 1, got m={m}, n={n}")
    return IdentityResult(m, n, alternating_hook_sum(m, n) - power_sum(m, n))


def symmetry_check(f: MultiPoly) -> bool:
    """True iff f is fixed by every adjacent transposition of variables."""
    for k in range(f.n - 1):
        permutation = list(range(f.n))
        permutation[k], permutation[k + 1] = k + 1, k
        if f.permute(permutation) != f:
            return False
    return True
