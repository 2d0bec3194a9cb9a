import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

from src.characters.symmetric import verify_power_sum_identity
from src.complexes.builders import build_Nm
from src.complexes.checks import frobenius_comparison
from src.complexes.cohomology import cohomology
from src.config import LimitsConfig, get_limits
from src.exceptions import HookSchurError, SizeLimitError
from src.ffield.field import Prime
from src.models.reports import SweepRow, SweepTable
from src.utils.guards import check_size

logger = logging.getLogger(__name__)

Cell = Tuple[int, int, int]


def _join(values: Iterable[int]) -> str:
    return ";".join(str(v) for v in values)


class SweepPipeline:
    """
    Runs cohomology, the Frobenius comparison and the power sum identity on
    every (m, p, n) cell of a grid with p | m. Rows come back in grid order
    whatever order the cells finish in.
    """

    def __init__(
        self,
        ms: Sequence[int] = tuple(range(1, 10)),
        ps: Sequence[int] = (2, 3),
        ns: Sequence[int] = (1, 2, 3, 4),
        workers: int = 1,
        limits: Optional[LimitsConfig] = None,
    ):
        self.primes = [Prime(p) for p in sorted(set(ps))]
        self.ms = sorted(set(ms))
        self.ns = sorted(set(ns))
        self.workers = max(1, workers)
        self.limits = limits or get_limits()

    def cells(self) -> List[Cell]:
        return [
            (m, prime.value, n)
            for m in self.ms
            for prime in self.primes
            if prime.divides(m)
            for n in self.ns
        ]

    def run_cell(self, cell: Cell) -> SweepRow:
        m, p, n = cell
        prime = Prime(p)
        try:
            check_size(m, n, self.limits)
            c = build_Nm(m, n, prime, max_dim=self.limits.max_dim)
            report = cohomology(c)
            comparison = frobenius_comparison(c)
            identity = verify_power_sum_identity(m, n)
        except SizeLimitError as e:
            logger.info("skipping m=%d p=%d n=%d: %s", m, p, n, e)
            return SweepRow(m, p, n, "skipped:size", detail=str(e))
        except HookSchurError as e:
            logger.warning("cell m=%d p=%d n=%d failed: %s", m, p, n, e)
            return SweepRow(m, p, n, "fail", detail=str(e))

        passed = report.passed and comparison.passed and identity.passed
        return SweepRow(
            m,
            p,
            n,
            "pass" if passed else "fail",
            cohomology_dims=_join(report.dims),
            expected_dims=_join(d.expected_dim for d in report.degrees),
            frobenius_ok=comparison.passed,
            identity_ok=identity.passed,
            detail="; ".join(comparison.failures),
        )

    def run(self) -> SweepTable:
        cells = self.cells()
        logger.info("sweeping %d cells with %d workers", len(cells), self.workers)
        if self.workers == 1:
            rows = [self.run_cell(cell) for cell in cells]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                rows = list(executor.map(self.run_cell, cells))
        return SweepTable(rows)
