from dataclasses import asdict, dataclass
from typing import Literal, Optional

from src.config import LimitsConfig, get_limits
from src.exceptions import PreconditionError

Command = Literal[
    "complex",
    "cohomology",
    "character",
    "identity",
    "adams",
    "homotopy",
    "equivariance",
    "sweep",
]
OutputFormat = Literal["text", "json"]


@dataclass
class RunConfig:
    command: Command
    m: Optional[int] = None
    n: Optional[int] = None
    p: Optional[int] = None
    shape: Optional[str] = None
    k: Optional[int] = None
    second_k: Optional[int] = None
    ell: Optional[int] = None
    descended: bool = False
    seed: Optional[int] = None
    trials: int = 20
    output_format: OutputFormat = "text"
    output_path: Optional[str] = None

    def validate(self, limits: Optional[LimitsConfig] = None) -> "RunConfig":
        """Enforce parameter bounds before any computation starts."""
        limits = limits or get_limits()
        if self.m is not None and not 1 <= self.m <= limits.max_m:
            raise PreconditionError(f"m must be in [1, {limits.max_m}], got {self.m}")
        if self.n is not None and not 1 <= self.n <= limits.max_n:
            raise PreconditionError(f"n must be in [1, {limits.max_n}], got {self.n}")
        if self.p is not None and self.p < 2:
            raise PreconditionError(f"p must be prime, got {self.p}")
        for label, value in (("k", self.k), ("l", self.second_k)):
            if value is not None and value < 1:
                raise PreconditionError(f"{label} must be >= 1, got {value}")
        if self.ell is not None and self.n is not None and not 1 <= self.ell <= self.n:
            raise PreconditionError(f"ell must be in [1, {self.n}], got {self.ell}")
        if self.trials < 1:
            raise PreconditionError(f"trials must be >= 1, got {self.trials}")
        if self.output_format not in ("text", "json"):
            raise PreconditionError(f"unknown output format {self.output_format!r}")
        return self

    def resolved_seed(self, limits: Optional[LimitsConfig] = None) -> int:
        if self.seed is not None:
            return self.seed
        return (limits or get_limits()).default_seed

    def to_dict(self):
        return asdict(self)
