from dataclasses import dataclass
from typing import Tuple

from src.exceptions import PreconditionError


@dataclass(frozen=True, order=True)
class HookShape:
    """The hook partition (arm, 1^leg); arm <= 0 denotes the zero module."""

    arm: int
    leg: int

    def __post_init__(self):
        if self.leg < 0:
            raise PreconditionError(f"hook leg must be >= 0, got {self.leg}")

    @property
    def size(self) -> int:
        return self.arm + self.leg

    @property
    def is_degenerate(self) -> bool:
        return self.arm <= 0

    def partition(self) -> Tuple[int, ...]:
        if self.is_degenerate:
            return ()
        return (self.arm,) + (1,) * self.leg

    @classmethod
    def parse(cls, text: str) -> "HookShape":
        """Read `a,b` (arm, leg)."""
        try:
            arm, leg = (int(part) for part in text.split(","))
        except ValueError:
            raise PreconditionError(f"shape must look like 'a,b', got {text!r}")
        return cls(arm, leg)

    def __str__(self) -> str:
        if self.is_degenerate:
            return "0"
        if self.leg == 0:
            return f"({self.arm})"
        leg = "1" if self.leg == 1 else f"1^{self.leg}"
        return f"({self.arm},{leg})"
