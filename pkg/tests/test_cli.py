import json

import pytest
from typer.testing import CliRunner

from src.characters import MultiPoly
from src.characters.symmetric import IdentityResult
from src.cli.app import app


@pytest.fixture
def runner():
    return CliRunner()


def _json(result):
    return json.loads(result.stdout)


class TestComplexCommands:
    """complex, cohomology and character."""

    def test_complex_json(self, runner):
        """Golden term dims for N_4 at n = 3 over F_2."""
        result = runner.invoke(app, "complex --m 4 --p 2 --n 3 --output json".split())
        assert result.exit_code == 0, result.output
        document = _json(result)
        assert document["report"] == "complex"
        assert document["data"]["term_dims"] == [15, 15, 3, 0]

    def test_complex_text(self, runner):
        """Text output names the complex and its dimensions."""
        result = runner.invoke(app, ["complex", "--m", "2", "--p", "2", "--n", "2"])
        assert result.exit_code == 0
        assert "term dims: [3, 1]" in result.output

    def test_lm_complex(self, runner):
        """--ell builds L_m instead."""
        result = runner.invoke(
            app, "complex --m 2 --p 2 --n 2 --ell 1 --output json".split()
        )
        assert result.exit_code == 0
        data = _json(result)["data"]
        assert data["kind"] == "L"
        assert data["augmentation_dim"] == 1

    def test_p_must_divide_m(self, runner):
        """Exit code 2 with the reason."""
        result = runner.invoke(app, ["complex", "--m", "3", "--p", "2", "--n", "2"])
        assert result.exit_code == 2
        assert "p must divide m" in result.output
        assert "phi to descend" in result.output

    def test_composite_p(self, runner):
        """A composite characteristic is a precondition failure."""
        result = runner.invoke(app, ["cohomology", "--m", "4", "--p", "4", "--n", "2"])
        assert result.exit_code == 2
        assert "p must be prime" in result.output

    def test_size_limit(self, runner, monkeypatch):
        """Exit code 3 above HOOKSCHUR_MAX_DIM."""
        monkeypatch.setenv("HOOKSCHUR_MAX_DIM", "10")
        result = runner.invoke(app, ["cohomology", "--m", "4", "--p", "2", "--n", "3"])
        assert result.exit_code == 3
        assert "HOOKSCHUR_MAX_DIM" in result.output

    def test_out_of_range_m(self, runner):
        """m above the desk-scale bound is refused up front."""
        result = runner.invoke(app, ["complex", "--m", "40", "--p", "2", "--n", "2"])
        assert result.exit_code == 2

    def test_cohomology(self, runner):
        """H dims of N_6 at n = 2 over F_3."""
        args = "cohomology --m 6 --p 3 --n 2 --output json".split()
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        degrees = _json(result)["data"]["degrees"]
        assert [d["cohomology_dim"] for d in degrees] == [3, 1, 0, 0, 0, 0]

    def test_character(self, runner):
        """Dimension and character of S_(2,1) at n = 3."""
        result = runner.invoke(app, "character --shape 2,1 --n 3 --output json".split())
        assert result.exit_code == 0
        data = _json(result)["data"]
        assert data["dimension"] == data["tableau_count"] == 8
        assert data["symmetric"] is True

    def test_bad_shape(self, runner):
        """Malformed shapes exit 2."""
        result = runner.invoke(app, ["character", "--shape", "2", "--n", "3"])
        assert result.exit_code == 2


class TestCheckCommands:
    """identity, adams, homotopy and equivariance."""

    def test_identity(self, runner):
        """The power sum identity holds."""
        result = runner.invoke(app, ["identity", "--m", "5", "--n", "3"])
        assert result.exit_code == 0
        assert "✓ power_sum_identity" in result.output

    def test_identity_failure_exits_1(self, runner, mocker):
        """A nonzero residual is a failed check."""
        mocker.patch(
            "src.cli.app.verify_power_sum_identity",
            return_value=IdentityResult(2, 2, MultiPoly.parse("v1*v2", 2)),
        )
        result = runner.invoke(app, ["identity", "--m", "2", "--n", "2"])
        assert result.exit_code == 1
        assert "residual = v1*v2" in result.output

    def test_adams(self, runner):
        """psi^3 of a rank-3 class, with composition."""
        result = runner.invoke(app, "adams --n 3 --k 3 --l 2 --output json".split())
        assert result.exit_code == 0
        assert _json(result)["data"]["values"]["psi^k"] == "v1^3 + v2^3 + v3^3"

    def test_adams_through_complex(self, runner):
        """--m routes psi^m through N_m."""
        result = runner.invoke(app, ["adams", "--n", "2", "--m", "4", "--p", "2"])
        assert result.exit_code == 0

    def test_adams_needs_k(self, runner):
        """Without --m, --k is required."""
        result = runner.invoke(app, ["adams", "--n", "2"])
        assert result.exit_code == 2

    def test_homotopy(self, runner):
        """dh + hd on L_4 at n = 3."""
        result = runner.invoke(app, "homotopy --m 4 --p 2 --n 3 --ell 2".split())
        assert result.exit_code == 0

    def test_descended_homotopy(self, runner):
        """--descended checks h_ell on N_m(V)."""
        args = "homotopy --m 6 --p 3 --n 2 --ell 1 --descended --output json"
        result = runner.invoke(app, args.split())
        assert result.exit_code == 0, result.output
        assert _json(result)["data"]["check"] == "descended_homotopy"

    def test_equivariance_is_reproducible(self, runner):
        """Same seed, same bytes."""
        args = "equivariance --m 3 --p 3 --n 2 --seed 11 --output json".split()
        first, second = runner.invoke(app, args), runner.invoke(app, args)
        assert first.exit_code == second.exit_code == 0
        assert first.stdout == second.stdout
        assert _json(first)["data"]["parameters"]["seed"] == 11


class TestSweepCommand:
    """The grid acceptance table."""

    def test_small_grid(self, runner, tmp_path):
        """Every cell passes and the CSV lands on disk."""
        out = tmp_path / "sweep.csv"
        result = runner.invoke(
            app, "sweep --m-max 4 --primes 2,3 --n-max 2 --out".split() + [str(out)]
        )
        assert result.exit_code == 0, result.output
        lines = out.read_text(encoding="utf-8").splitlines()
        # (2,2), (3,3), (4,2) times n in {1, 2}
        assert len(lines) == 1 + 6

    def test_empty_grid(self, runner):
        """No cell with p | m is still a pass."""
        result = runner.invoke(app, ["sweep", "--m-max", "1", "--output", "json"])
        assert result.exit_code == 0
        assert _json(result)["data"]["rows"] == []

    def test_oversized_cells_are_skipped(self, runner, monkeypatch):
        """Cells over the limit are marked, not failed."""
        monkeypatch.setenv("HOOKSCHUR_MAX_DIM", "20")
        result = runner.invoke(
            app, "sweep --m-max 4 --primes 2 --n-max 3 --output json".split()
        )
        assert result.exit_code == 0
        statuses = {row["status"] for row in _json(result)["data"]["rows"]}
        assert "skipped:size" in statuses
        assert "fail" not in statuses

    def test_composite_prime_in_grid(self, runner):
        """Composite entries in --primes are rejected."""
        result = runner.invoke(app, ["sweep", "--primes", "2,6"])
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "flag,value", [("--m-max", "30"), ("--m-max", "0"), ("--n-max", "7")]
    )
    def test_grid_bounds_are_enforced(self, runner, mocker, flag, value):
        """--m-max and --n-max obey the same bounds as --m and --n."""
        pipeline = mocker.patch("src.cli.app.SweepPipeline")
        result = runner.invoke(app, ["sweep", "--primes", "2", flag, value])
        assert result.exit_code == 2
        assert "must be in" in result.output
        pipeline.assert_not_called()

    def test_parallel_matches_serial(self, runner):
        """Worker count does not change the table."""
        args = "sweep --m-max 4 --primes 2 --n-max 2 --output json".split()
        serial = runner.invoke(app, args)
        parallel = runner.invoke(app, args + ["--workers", "3"])
        assert serial.stdout == parallel.stdout
