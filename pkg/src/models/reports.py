"""
Report records produced by the computations and consumed by the writers.

Records hold only JSON-native values (ints, strings, bools, lists, dicts);
polynomials are stored in their rendered text form.
"""

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional


@dataclass
class ComplexSummary:
    kind: str
    m: int
    n: int
    p: int
    term_dims: List[int]
    differential_ranks: List[int]
    d_squared_zero: bool
    ell: Optional[int] = None
    augmentation_dim: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.d_squared_zero

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ComplexSummary":
        return cls(**data)

    def summary_lines(self) -> List[str]:
        label = f"N_{self.m}" if self.kind == "N" else f"L_{self.m}(ell={self.ell})"
        lines = [
            f"{label} at n={self.n}, p={self.p}",
            f"term dims: {self.term_dims}",
            f"differential ranks: {self.differential_ranks}",
        ]
        if self.augmentation_dim is not None:
            lines.append(f"augmentation dim: {self.augmentation_dim}")
        lines.append(f"d^2 = 0: {self.d_squared_zero}")
        return lines


@dataclass
class DegreeCohomology:
    degree: int
    term_dim: int
    kernel_dim: int
    image_dim: int
    cohomology_dim: int
    character: str
    expected_dim: Optional[int] = None
    expected_character: Optional[str] = None

    @property
    def dim_match(self) -> bool:
        return self.expected_dim is None or self.expected_dim == self.cohomology_dim

    @property
    def character_match(self) -> bool:
        return (
            self.expected_character is None
            or self.expected_character == self.character
        )


@dataclass
class CohomologyReport:
    kind: str
    m: int
    n: int
    p: int
    degrees: List[DegreeCohomology]
    euler_terms: int
    euler_cohomology: int

    @property
    def dims(self) -> List[int]:
        return [d.cohomology_dim for d in self.degrees]

    @property
    def euler_consistent(self) -> bool:
        return self.euler_terms == self.euler_cohomology

    @property
    def passed(self) -> bool:
        return self.euler_consistent and all(
            d.dim_match and d.character_match for d in self.degrees
        )

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CohomologyReport":
        data = dict(data)
        data["degrees"] = [DegreeCohomology(**d) for d in data["degrees"]]
        return cls(**data)

    def summary_lines(self) -> List[str]:
        lines = [f"H^*(N_{self.m}) at n={self.n}, p={self.p}"]
        for d in self.degrees:
            mark = "✓" if d.dim_match and d.character_match else "✗"
            expected = "" if d.expected_dim is None else f" (expected {d.expected_dim})"
            lines.append(
                f"{mark} H^{d.degree}: dim {d.cohomology_dim}{expected}, "
                f"CH = {d.character}"
            )
        mark = "✓" if self.euler_consistent else "✗"
        lines.append(
            f"{mark} Euler: terms {self.euler_terms}, "
            f"cohomology {self.euler_cohomology}"
        )
        return lines


@dataclass
class CheckReport:
    """Outcome of a named verification, with its parameters and tallies."""

    check: str
    passed: bool
    parameters: Dict[str, int]
    counts: Dict[str, int] = field(default_factory=dict)
    values: Dict[str, str] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CheckReport":
        return cls(**data)

    def summary_lines(self) -> List[str]:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = [f"{'✓' if self.passed else '✗'} {self.check} ({params})"]
        lines.extend(f"  {k}: {v}" for k, v in self.counts.items())
        lines.extend(f"  {k} = {v}" for k, v in self.values.items())
        lines.extend(f"  ✗ {failure}" for failure in self.failures)
        return lines


@dataclass
class CharacterReport:
    shape: str
    n: int
    p: int
    dimension: int
    tableau_count: int
    character: str
    symmetric: bool
    frobenius_dimension: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.symmetric and self.dimension == self.tableau_count

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CharacterReport":
        return cls(**data)

    def summary_lines(self) -> List[str]:
        lines = [
            f"S_{self.shape} at n={self.n}, p={self.p}: dim {self.dimension} "
            f"(tableaux {self.tableau_count})",
            f"CH = {self.character}",
            f"symmetric: {self.symmetric}",
        ]
        if self.frobenius_dimension is not None:
            lines.append(f"dim S^{self.p}: {self.frobenius_dimension}")
        return lines


SWEEP_STATUSES = ("pass", "fail", "skipped:size")


@dataclass
class SweepRow:
    m: int
    p: int
    n: int
    status: str
    cohomology_dims: str = ""
    expected_dims: str = ""
    frobenius_ok: Optional[bool] = None
    identity_ok: Optional[bool] = None
    detail: str = ""

    def to_dict(self):
        return asdict(self)


@dataclass
class SweepTable:
    rows: List[SweepRow]

    @property
    def passed(self) -> bool:
        return all(row.status != "fail" for row in self.rows)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SweepTable":
        return cls([SweepRow(**row) for row in data["rows"]])

    def summary_lines(self) -> List[str]:
        marks = {"pass": "✓", "fail": "✗", "skipped:size": "⚠️"}
        lines = [
            f"{marks[row.status]} m={row.m} p={row.p} n={row.n}: {row.status}"
            + (f" H dims [{row.cohomology_dims}]" if row.cohomology_dims else "")
            + (f" ({row.detail})" if row.detail else "")
            for row in self.rows
        ]
        counts = {s: sum(1 for r in self.rows if r.status == s) for s in SWEEP_STATUSES}
        lines.append(
            f"{len(self.rows)} cells: {counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['skipped:size']} skipped"
        )
        return lines
