"""
K_0 in the split model: a class is its character, a polynomial in the
Chern roots v_1..v_n. Effective classes have nonnegative coefficients and
split as sums of line classes (monomials).
"""

import logging
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from src.characters.multipoly import MultiPoly
from src.characters.symmetric import (
    alternating_hook_sum,
    frobenius_scale,
    power_sum,
    schur_polynomial,
)
from src.complexes.builders import build_Nm
from src.complexes.chain_complex import ChainComplexFp
from src.complexes.cohomology import cohomology_characters, image_character
from src.exceptions import PreconditionError
from src.ffield.field import Prime
from src.models.reports import CheckReport
from src.schur.shapes import HookShape

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class K0Class:
    n: int
    value: MultiPoly

    def __post_init__(self):
        if self.value.n != self.n:
            raise PreconditionError(
                f"class in {self.n} variables has a character in {self.value.n}"
            )

    @classmethod
    def zero(cls, n: int) -> "K0Class":
        return cls(n, MultiPoly.zero(n))

    @classmethod
    def line(cls, n: int, exponents: Iterable[int]) -> "K0Class":
        """The line class v^exponents."""
        return cls(n, MultiPoly.monomial(tuple(exponents)))

    @classmethod
    def split(cls, n: int, variables: Optional[Iterable[int]] = None) -> "K0Class":
        """v_k summed over the given 1-based variables (all of them by default)."""
        variables = range(1, n + 1) if variables is None else variables
        value = MultiPoly.zero(n)
        for k in variables:
            value = value + MultiPoly.variable(n, k)
        return cls(n, value)

    @property
    def rank(self) -> int:
        return self.value.evaluate([1] * self.n)

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.value.terms.values())

    def roots(self) -> List[Tuple[int, ...]]:
        """Line classes of an effective class, with multiplicity."""
        if not self.is_effective():
            raise PreconditionError("only effective classes split into line classes")
        return [mu for mu, c in self.value.sorted_terms() for _ in range(c)]

    def parts(self) -> Tuple["K0Class", "K0Class"]:
        """(positive part, negative part) with self = positive - negative."""
        positive = {mu: c for mu, c in self.value.terms.items() if c > 0}
        negative = {mu: -c for mu, c in self.value.terms.items() if c < 0}
        return K0Class(self.n, MultiPoly(self.n, positive)), K0Class(
            self.n, MultiPoly(self.n, negative)
        )

    def _check(self, other: "K0Class"):
        if other.n != self.n:
            raise PreconditionError(
                f"classes over {self.n} and {other.n} roots do not mix"
            )

    def __add__(self, other: "K0Class") -> "K0Class":
        self._check(other)
        return K0Class(self.n, self.value + other.value)

    def __sub__(self, other: "K0Class") -> "K0Class":
        self._check(other)
        return K0Class(self.n, self.value - other.value)

    def __neg__(self) -> "K0Class":
        return K0Class(self.n, -self.value)

    def __mul__(self, other: "K0Class") -> "K0Class":
        self._check(other)
        return K0Class(self.n, self.value * other.value)

    def __str__(self) -> str:
        return f"[{self.value.render()}]"


def _root_images(cls: K0Class) -> List[MultiPoly]:
    return [MultiPoly.monomial(mu) for mu in cls.roots()]


# ---------------------------
# Euler characteristics
# ---------------------------


def euler_characteristic(c: ChainComplexFp) -> K0Class:
    """sum (-1)^i [T_i]."""
    total = MultiPoly.zero(c.n)
    for i, term in enumerate(c.terms):
        total = total + term.character() * (-1) ** i
    return K0Class(c.n, total)


def euler_from_cohomology(c: ChainComplexFp) -> K0Class:
    """sum (-1)^i [H^i]."""
    total = MultiPoly.zero(c.n)
    for i, character in enumerate(cohomology_characters(c)):
        total = total + character * (-1) ** i
    return K0Class(c.n, total)


def secondary_euler_characteristic(c: ChainComplexFp) -> K0Class:
    """sum (-1)^i [im d_i]."""
    total = MultiPoly.zero(c.n)
    for i in range(len(c.differentials)):
        total = total + image_character(c, i) * (-1) ** i
    return K0Class(c.n, total)


@dataclass(frozen=True)
class EulerData:
    complex: ChainComplexFp
    chi: K0Class
    chi_cohomology: K0Class
    chi_prime: K0Class

    def consistent(self) -> bool:
        """chi from terms equals chi from cohomology, and every term splits as
        [T_i] = [H^i] + [im d_{i-1}] + [im d_i]."""
        if self.chi.value != self.chi_cohomology.value:
            return False
        c = self.complex
        cohomologies = cohomology_characters(c)
        images = [image_character(c, i) for i in range(len(c.differentials))]
        for i, term in enumerate(c.terms):
            parts = cohomologies[i]
            if i > 0:
                parts = parts + images[i - 1]
            if i < len(images):
                parts = parts + images[i]
            if parts != term.character():
                return False
        return True


def euler_data(c: ChainComplexFp) -> EulerData:
    return EulerData(
        c,
        euler_characteristic(c),
        euler_from_cohomology(c),
        secondary_euler_characteristic(c),
    )


# ---------------------------
# Adams and lambda operations
# ---------------------------


def _hook_sum_of_roots(k: int, roots: List[MultiPoly], n: int) -> MultiPoly:
    """sum_{i<k} (-1)^i s_(k-i,1^i) evaluated at the given roots."""
    if not roots:
        return MultiPoly.zero(n)
    r = len(roots)
    total = MultiPoly.zero(r)
    for i in range(min(k, r)):
        term = schur_polynomial(HookShape(k - i, i), r)
        total = total + term if i % 2 == 0 else total - term
    return total.substitute(roots)


def adams_grayson(k: int, cls: K0Class) -> K0Class:
    """
    psi^k[E] = sum_{i=0}^{k-1} (-1)^i [S_(k-i,1^i)(E)].

    Line classes go to their k-th power; virtual classes are handled
    additively through their positive and negative parts.
    """
    if k <= 0:
        raise PreconditionError(f"Adams operations are supported for k >= 1, got {k}")
    if cls.value.is_monomial() and cls.is_effective() and cls.rank == 1:
        return K0Class(cls.n, cls.value**k)
    if not cls.is_effective():
        positive, negative = cls.parts()
        return adams_grayson(k, positive) - adams_grayson(k, negative)
    return K0Class(cls.n, _hook_sum_of_roots(k, _root_images(cls), cls.n))


def lambda_class(k: int, cls: K0Class) -> K0Class:
    """lambda^k of an effective class: e_k of its roots."""
    if k < 0:
        raise PreconditionError(f"lambda^k needs k >= 0, got {k}")
    if k == 0:
        return K0Class(cls.n, MultiPoly.constant(cls.n, 1))
    roots = _root_images(cls)
    total = MultiPoly.zero(cls.n)
    for chosen in combinations(roots, k):
        total = total + reduce(lambda a, b: a * b, chosen)
    return K0Class(cls.n, total)


def adams_composition_check(k: int, j: int, cls: K0Class) -> bool:
    """psi^k psi^j = psi^{kj}."""
    composite = adams_grayson(k, adams_grayson(j, cls))
    return composite.value == adams_grayson(k * j, cls).value


def ring_hom_check(k: int, a: K0Class, b: K0Class) -> bool:
    """psi^k is additive and multiplicative on a, b."""
    psi_a, psi_b = adams_grayson(k, a), adams_grayson(k, b)
    additive = adams_grayson(k, a + b).value == (psi_a + psi_b).value
    multiplicative = adams_grayson(k, a * b).value == (psi_a * psi_b).value
    return additive and multiplicative


def newton_identity_check(k: int, cls: K0Class) -> bool:
    """psi^k = sum_{i=1}^{k-1} (-1)^{i-1} lambda^i psi^{k-i} + (-1)^{k-1} k lambda^k."""
    if k <= 0:
        raise PreconditionError(f"Newton's identity needs k >= 1, got {k}")
    rhs = lambda_class(k, cls).value * ((-1) ** (k - 1) * k)
    for i in range(1, k):
        rhs = rhs + (lambda_class(i, cls).value * adams_grayson(k - i, cls).value) * (
            (-1) ** (i - 1)
        )
    return adams_grayson(k, cls).value == rhs


def frobenius_adams_check(m: int, n: int, prime: Prime) -> CheckReport:
    """
    psi^m[V] = p_m for the rank-n split class, three ways: the alternating sum
    of built hook module characters, the Euler characteristic of N_m(V) taken
    through its cohomology, and psi^p(psi^{m/p}[V]).
    """
    if not prime.divides(m):
        raise PreconditionError(f"p must divide m, got m={m}, p={prime}")
    p = prime.value
    target = power_sum(m, n)
    V = K0Class.split(n)

    direct = alternating_hook_sum(m, n)
    through_cohomology = euler_from_cohomology(build_Nm(m, n, prime)).value
    inner = adams_grayson(m // p, V)
    inductive = adams_grayson(p, inner).value
    scaled = frobenius_scale(inner.value, p)

    routes = {
        "direct": direct,
        "cohomology": through_cohomology,
        "inductive": inductive,
        "frobenius": scaled,
    }
    failures = [
        f"{name}: {value.render()} != {target.render()}"
        for name, value in routes.items()
        if value != target
    ]
    logger.info("psi^%d at n=%d, p=%d: %d routes failed", m, n, p, len(failures))
    return CheckReport(
        check="frobenius_adams",
        passed=not failures,
        parameters={"m": m, "n": n, "p": p},
        values={"psi^m": target.render(), **{k: v.render() for k, v in routes.items()}},
        failures=failures,
    )
