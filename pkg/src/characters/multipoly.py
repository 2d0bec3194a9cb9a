"""
Sparse integer polynomials in v_1, ..., v_n.

Terms are kept as {exponent vector: nonzero coefficient}. The text format
(used in reports and golden values) lists terms graded-lex, highest degree
first with v_1 largest, as `c*v1^a1*v2^a2`: unit coefficients, zero
exponents and exponents equal to 1 are not written.
"""

import re
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exponents = Tuple[int, ...]

_TERM_PATTERN = re.compile(r"^(?:(\d+)\*?)?((?:v\d+(?:\^\d+)?\*?)*)$")
_FACTOR_PATTERN = re.compile(r"v(\d+)(?:\^(\d+))?")


class MultiPoly:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponents, int] | None = None):
        if n < 0:
            raise ValueError(f"number of variables must be >= 0, got {n}")
        cleaned: Dict[Exponents, int] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != n:
                raise ValueError(f"exponent vector {exponents} has length != {n}")
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in {exponents}")
            total = cleaned.get(exponents, 0) + int(coefficient)
            if total:
                cleaned[exponents] = total
            else:
                cleaned.pop(exponents, None)
        self.n = n
        self._terms = cleaned

    # ---------------------------
    # Constructors
    # ---------------------------

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: int) -> "MultiPoly":
        return cls(n, {(0,) * n: value})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient: int = 1) -> "MultiPoly":
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coefficient})

    @classmethod
    def variable(cls, n: int, k: int) -> "MultiPoly":
        """v_k with k 1-based."""
        exponents = [0] * n
        exponents[k - 1] = 1
        return cls.monomial(exponents)

    @classmethod
    def from_monomials(cls, n: int, monomials: Iterable[Exponents]) -> "MultiPoly":
        """Sum of v^mu over the given exponent vectors, with multiplicity."""
        counts: Dict[Exponents, int] = {}
        for mu in monomials:
            counts[tuple(mu)] = counts.get(tuple(mu), 0) + 1
        return cls(n, counts)

    # ---------------------------
    # Access
    # ---------------------------

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def sorted_terms(self) -> list:
        return sorted(
            self._terms.items(), key=lambda kv: (-sum(kv[0]), [-e for e in kv[0]])
        )

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    # ---------------------------
    # Arithmetic
    # ---------------------------

    def _check(self, other: "MultiPoly"):
        if other.n != self.n:
            raise ValueError(
                f"polynomials in {self.n} and {other.n} variables do not mix"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        total = dict(self._terms)
        for e, c in other._terms.items():
            total[e] = total.get(e, 0) + c
        return MultiPoly(self.n, total)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.n, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        product: Dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                product[e] = product.get(e, 0) + c1 * c2
        return MultiPoly(self.n, product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    # ---------------------------
    # Transformations
    # ---------------------------

    def map_exponents(self, fn) -> "MultiPoly":
        mapped: Dict[Exponents, int] = {}
        for e, c in self._terms.items():
            image = tuple(fn(e))
            mapped[image] = mapped.get(image, 0) + c
        n = len(next(iter(mapped))) if mapped else self.n
        return MultiPoly(n, mapped)

    def permute(self, permutation: Sequence[int]) -> "MultiPoly":
        """Substitute v_k -> v_{permutation[k]} (0-based positions)."""
        def fn(e: Exponents) -> Exponents:
            out = [0] * self.n
            for k, value in enumerate(e):
                out[permutation[k]] = value
            return tuple(out)

        return self.map_exponents(fn)

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace v_k by images[k - 1]; all images share one variable count."""
        if len(images) != self.n:
            raise ValueError(f"need {self.n} images, got {len(images)}")
        if not images:
            return self
        target_n = images[0].n
        result = MultiPoly.zero(target_n)
        powers: Dict[Tuple[int, int], MultiPoly] = {}
        for e, c in self._terms.items():
            term = MultiPoly.constant(target_n, c)
            for k, power in enumerate(e):
                if power:
                    if (k, power) not in powers:
                        powers[(k, power)] = images[k] ** power
                    term = term * powers[(k, power)]
            result = result + term
        return result

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.n:
            raise ValueError(f"need {self.n} coordinates, got {len(point)}")
        total = 0
        for e, c in self._terms.items():
            value = c
            for x, power in zip(point, e):
                value *= x**power
            total += value
        return total

    # ---------------------------
    # Text format
    # ---------------------------

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, (exponents, coefficient) in enumerate(self.sorted_terms()):
            factors = [
                f"v{v}^{e}" if e > 1 else f"v{v}"
                for v, e in enumerate(exponents, start=1)
                if e
            ]
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if k == 0:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    @classmethod
    def parse(cls, text: str, n: int) -> "MultiPoly":
        """Inverse of render()."""
        text = text.strip()
        if text == "0":
            return cls.zero(n)
        normalized = text.replace(" - ", " + -").replace(" ", "")
        terms: Dict[Exponents, int] = {}
        for chunk in normalized.split("+"):
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            match = _TERM_PATTERN.match(chunk)
            if not match or not chunk:
                raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
            coefficient = int(match.group(1)) if match.group(1) else 1
            exponents = [0] * n
            for var, power in _FACTOR_PATTERN.findall(match.group(2)):
                k = int(var)
                if not 1 <= k <= n:
                    raise ValueError(f"variable v{k} outside v1..v{n}")
                exponents[k - 1] += int(power) if power else 1
            key = tuple(exponents)
            terms[key] = terms.get(key, 0) + sign * coefficient
        return cls(n, terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.n}, {self.render()!r})"
