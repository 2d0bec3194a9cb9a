import math
from dataclasses import dataclass
from typing import Union

from src.exceptions import CompositeModulusError, PreconditionError


def _is_prime(value: int) -> bool:
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


@dataclass(frozen=True, order=True)
class Prime:
    """The characteristic p; primality is checked by trial division."""

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or not _is_prime(self.value):
            raise CompositeModulusError(self.value)

    def __int__(self) -> int:
        return self.value

    def divides(self, m: int) -> bool:
        return m % self.value == 0

    def element(self, residue: int) -> "FpElement":
        return FpElement(residue, self)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class FpElement:
    residue: int
    modulus: Prime

    def __post_init__(self):
        # Always store the fully reduced residue
        object.__setattr__(self, "residue", self.residue % self.modulus.value)

    @property
    def p(self) -> int:
        return self.modulus.value

    def _coerce(self, other: Union["FpElement", int]) -> "FpElement":
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise PreconditionError(
                    f"cannot combine elements of F_{self.p} and F_{other.p}"
                )
            return other
        if isinstance(other, int):
            return FpElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.residue - other.residue, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(other.residue - self.residue, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "FpElement":
        return FpElement(-self.residue, self.modulus)

    def inv(self) -> "FpElement":
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElement(pow(self.residue, -1, self.p), self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __pow__(self, exponent: int) -> "FpElement":
        if exponent < 0:
            return self.inv() ** (-exponent)
        return FpElement(pow(self.residue, exponent, self.p), self.modulus)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __int__(self) -> int:
        return self.residue

    def __str__(self) -> str:
        return str(self.residue)


def binomial(n: int, k: int) -> int:
    """Exact integer binomial C(n, k); zero outside 0 <= k <= n."""
    if n < 0:
        raise PreconditionError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_mod_p(n: int, k: int, p: Prime) -> FpElement:
    """
    C(n, k) mod p as the product of digit binomials in base p (Lucas).

    Only binomials of single base-p digits are ever formed.
    """
    if n < 0 or k < 0:
        raise PreconditionError(f"binomial_mod_p needs n, k >= 0, got ({n}, {k})")
    base = p.value
    result = 1
    while n or k:
        n, n_digit = divmod(n, base)
        k, k_digit = divmod(k, base)
        if k_digit > n_digit:
            return FpElement(0, p)
        result = (result * math.comb(n_digit, k_digit)) % base
    return FpElement(result, p)


def lucas_shift_identity_check(m: int, n: int, p: Prime) -> bool:
    """C(pm + p - 1, pn + p - 1) == C(m, n) in F_p."""
    if m < 0 or n < 0:
        raise PreconditionError(f"lucas shift check needs m, n >= 0, got ({m}, {n})")
    q = p.value
    shifted = binomial_mod_p(q * m + q - 1, q * n + q - 1, p)
    return shifted == binomial_mod_p(m, n, p)
