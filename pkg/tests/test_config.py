import logging

import pytest

from src.config import DEFAULT_MAX_DIM, LimitsConfig, get_limits
from src.exceptions import PreconditionError, SizeLimitError
from src.main import SweepPipeline
from src.models import RunConfig
from src.utils import check_size, max_ambient_dimension


class TestLimits:
    """HOOKSCHUR_MAX_DIM and the desk-scale bounds."""

    def test_default(self, monkeypatch):
        """Unset means the default limit."""
        monkeypatch.delenv("HOOKSCHUR_MAX_DIM", raising=False)
        assert get_limits().max_dim == DEFAULT_MAX_DIM

    def test_env_override(self, monkeypatch):
        """The environment raises or lowers the limit."""
        monkeypatch.setenv("HOOKSCHUR_MAX_DIM", "123")
        assert get_limits().max_dim == 123

    @pytest.mark.parametrize("raw", ["lots", "-5", "0"])
    def test_invalid_value_falls_back(self, monkeypatch, caplog, raw):
        """Garbage is ignored with a warning."""
        monkeypatch.setenv("HOOKSCHUR_MAX_DIM", raw)
        with caplog.at_level(logging.WARNING, logger="src.config"):
            assert get_limits().max_dim == DEFAULT_MAX_DIM
        assert "HOOKSCHUR_MAX_DIM" in caplog.text

    def test_size_guard(self):
        """The largest ambient of N_4 at n = 3 is V (x) S_3 V."""
        assert max_ambient_dimension(4, 3) == 30
        assert check_size(4, 3, LimitsConfig(max_dim=30)) == 30
        with pytest.raises(SizeLimitError):
            check_size(4, 3, LimitsConfig(max_dim=29))


class TestRunConfig:
    """Parameter validation before any computation."""

    def test_valid(self):
        """A typical invocation validates and keeps its values."""
        config = RunConfig("complex", m=4, n=3, p=2).validate()
        assert config.to_dict()["m"] == 4

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"m": 0},
            {"m": 13},
            {"n": 7},
            {"p": 1},
            {"k": 0},
            {"n": 2, "ell": 3},
            {"trials": 0},
            {"output_format": "xml"},
        ],
    )
    def test_rejects(self, kwargs):
        """Out-of-range parameters are precondition errors."""
        with pytest.raises(PreconditionError):
            RunConfig("complex", **kwargs).validate(LimitsConfig(max_dim=100))

    def test_seed(self):
        """An explicit seed wins over the configured default."""
        limits = LimitsConfig(max_dim=100, default_seed=5)
        assert RunConfig("equivariance").resolved_seed(limits) == 5
        assert RunConfig("equivariance", seed=9).resolved_seed(limits) == 9


class TestSweepPipeline:
    """Grid enumeration and per-cell outcomes."""

    def test_cells_need_p_dividing_m(self):
        """Only (m, p) with p | m are swept, in grid order."""
        pipeline = SweepPipeline(ms=range(1, 7), ps=(3, 2), ns=(1,))
        assert pipeline.cells() == [
            (2, 2, 1),
            (3, 3, 1),
            (4, 2, 1),
            (6, 2, 1),
            (6, 3, 1),
        ]

    def test_skipped_cell(self):
        """A cell over the limit is skipped, not failed."""
        pipeline = SweepPipeline(limits=LimitsConfig(max_dim=5))
        row = pipeline.run_cell((4, 2, 3))
        assert row.status == "skipped:size"

    def test_failing_cell(self, mocker):
        """Library errors inside a cell mark it as failed."""
        mocker.patch(
            "src.main.frobenius_comparison",
            side_effect=PreconditionError("boom"),
        )
        row = SweepPipeline().run_cell((2, 2, 1))
        assert row.status == "fail"
        assert row.detail == "boom"

    def test_inconsistent_ranks_fail_the_cell(self, mocker):
        """A rank count exceeding a block is a failed cell, not a crash."""
        ranks = mocker.MagicMock()
        ranks.get.return_value = 10**6
        mocker.patch("src.complexes.cohomology.image_ranks", return_value=ranks)
        row = SweepPipeline().run_cell((2, 2, 2))
        assert row.status == "fail"
        assert "negative cohomology" in row.detail
