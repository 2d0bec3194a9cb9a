"""
Typer application: one command per computation, each with text or JSON
output and the exit-code contract

    0  every check passed
    1  a mathematical check failed (or an internal invariant broke)
    2  invalid arguments or preconditions (p does not divide m, composite p)
    3  refused because an ambient space exceeds the size limit
"""

import logging
import sys
from typing import Callable, List, Optional

import typer

from src.characters.symmetric import (
    power_sum,
    symmetry_check,
    verify_power_sum_identity,
)
from src.complexes.builders import build_Lm, build_Nm
from src.complexes.checks import (
    complex_summary,
    descended_homotopy_check,
    equivariance_check,
    homotopy_check,
)
from src.complexes.cohomology import cohomology
from src.exceptions import InvariantViolation, PreconditionError, SizeLimitError
from src.ffield.field import Prime
from src.ktheory.k0 import (
    K0Class,
    adams_composition_check,
    adams_grayson,
    frobenius_adams_check,
    newton_identity_check,
)
from src.main import SweepPipeline
from src.models.reports import CharacterReport, CheckReport
from src.models.run_config import RunConfig
from src.reporting.report_generator import Report, ReportWriter
from src.schur.frobenius import frobenius_subquotient
from src.schur.hook_module import build_hook_module
from src.schur.shapes import HookShape
from src.schur.tableaux import tableau_count
from src.utils.guards import check_size

app = typer.Typer(
    name="hookschur",
    help="Hook Schur modules, the complexes N_m(V) and Adams operations over F_p.",
    add_completion=False,
    no_args_is_help=True,
)

OUTPUT_HELP = "Output format: text or json"
OUT_HELP = "Also write the report to this file (.csv for sweep tables)"


@app.callback()
def main_callback(
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Log progress to stderr"
    ),
):
    if verbose:
        logging.basicConfig(
            level=logging.INFO,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )


def _execute(config: RunConfig, compute: Callable[[RunConfig], Report]):
    """Validate, compute, emit, and exit with the contract's code."""
    try:
        config.validate()
        report = compute(config)
    except SizeLimitError as e:
        typer.echo(f"⚠️  {e}", err=True)
        raise typer.Exit(code=3)
    except PreconditionError as e:
        typer.echo(f"✗ {e}", err=True)
        raise typer.Exit(code=2)
    except InvariantViolation as e:
        typer.echo(f"✗ invariant violated: {e}", err=True)
        raise typer.Exit(code=1)

    writer = ReportWriter(config.output_format, config.output_path)
    typer.echo(writer.render(report))
    writer.save(report)
    raise typer.Exit(code=0 if report.passed else 1)


def _require(value: Optional[int], name: str) -> int:
    if value is None:
        raise PreconditionError(f"--{name} is required for this command")
    return value


# ---------------------------
# Computations behind the commands
# ---------------------------


def run_complex(config: RunConfig) -> Report:
    m, n = _require(config.m, "m"), _require(config.n, "n")
    prime = Prime(_require(config.p, "p"))
    check_size(m, n)
    if config.ell is not None:
        return complex_summary(build_Lm(m, n, prime, config.ell))
    return complex_summary(build_Nm(m, n, prime))


def run_cohomology(config: RunConfig) -> Report:
    m, n = _require(config.m, "m"), _require(config.n, "n")
    prime = Prime(_require(config.p, "p"))
    check_size(m, n)
    return cohomology(build_Nm(m, n, prime))


def run_character(config: RunConfig) -> Report:
    if config.shape is None:
        raise PreconditionError("--shape a,b is required for this command")
    shape = HookShape.parse(config.shape)
    n = _require(config.n, "n")
    prime = Prime(config.p or 2)
    module = build_hook_module(shape, n, prime)
    character = module.character()
    return CharacterReport(
        shape=str(shape),
        n=n,
        p=prime.value,
        dimension=module.dimension,
        tableau_count=tableau_count(shape, n),
        character=character.render(),
        symmetric=symmetry_check(character),
        frobenius_dimension=frobenius_subquotient(module).dimension,
    )


def run_identity(config: RunConfig) -> Report:
    m, n = _require(config.m, "m"), _require(config.n, "n")
    result = verify_power_sum_identity(m, n)
    return CheckReport(
        check="power_sum_identity",
        passed=result.passed,
        parameters={"m": m, "n": n},
        values={"residual": result.residual.render()},
    )


def run_adams(config: RunConfig) -> Report:
    n = _require(config.n, "n")
    if config.m is not None:
        return frobenius_adams_check(config.m, n, Prime(_require(config.p, "p")))

    k = _require(config.k, "k")
    V = K0Class.split(n)
    psi = adams_grayson(k, V)
    values = {"psi^k": psi.value.render()}
    failures: List[str] = []
    if psi.value != power_sum(k, n):
        failures.append(f"psi^{k}[V] != p_{k}")
    if not newton_identity_check(k, V):
        failures.append(f"Newton's identity fails for k={k}")
    parameters = {"k": k, "n": n}
    j = config.second_k
    if j is not None:
        parameters["l"] = j
        if not adams_composition_check(k, j, V):
            failures.append(f"psi^{k} psi^{j} != psi^{k * j}")
    return CheckReport(
        check="adams",
        passed=not failures,
        parameters=parameters,
        values=values,
        failures=failures,
    )


def run_homotopy(config: RunConfig) -> Report:
    m, n = _require(config.m, "m"), _require(config.n, "n")
    prime = Prime(_require(config.p, "p"))
    if config.descended:
        return descended_homotopy_check(m, n, prime, config.ell or 1)
    return homotopy_check(m, n, prime, config.ell or 1)


def run_equivariance(config: RunConfig) -> Report:
    m, n = _require(config.m, "m"), _require(config.n, "n")
    prime = Prime(_require(config.p, "p"))
    check_size(m, n)
    return equivariance_check(
        build_Nm(m, n, prime), trials=config.trials, seed=config.resolved_seed()
    )


# ---------------------------
# Commands
# ---------------------------


@app.command("complex")
def complex_command(
    m: int = typer.Option(..., "--m", help="Degree m, divisible by p"),
    n: int = typer.Option(..., "--n", help="dim V"),
    p: int = typer.Option(..., "--p", help="Characteristic"),
    ell: Optional[int] = typer.Option(
        None, "--ell", help="Build L_m(V, v_ell) instead"
    ),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """Term dimensions, differential ranks and d^2 = 0 for N_m(V)."""
    config = RunConfig(
        "complex", m=m, n=n, p=p, ell=ell, output_format=output, output_path=out
    )
    _execute(config, run_complex)


@app.command("cohomology")
def cohomology_command(
    m: int = typer.Option(..., "--m"),
    n: int = typer.Option(..., "--n"),
    p: int = typer.Option(..., "--p"),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """H^i(N_m(V)) against F^p S_(m/p-i,1^i)(V)."""
    config = RunConfig(
        "cohomology", m=m, n=n, p=p, output_format=output, output_path=out
    )
    _execute(config, run_cohomology)


@app.command("character")
def character_command(
    shape: str = typer.Option(..., "--shape", help="Hook shape as 'a,b' for (a,1^b)"),
    n: int = typer.Option(..., "--n"),
    p: int = typer.Option(2, "--p"),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """Dimension and character of S_(a,1^b)(V)."""
    config = RunConfig(
        "character", n=n, p=p, shape=shape, output_format=output, output_path=out
    )
    _execute(config, run_character)


@app.command("identity")
def identity_command(
    m: int = typer.Option(..., "--m"),
    n: int = typer.Option(..., "--n"),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """Residual of p_m - sum (-1)^i s_(m-i,1^i)."""
    config = RunConfig("identity", m=m, n=n, output_format=output, output_path=out)
    _execute(config, run_identity)


@app.command("adams")
def adams_command(
    n: int = typer.Option(..., "--n", help="Rank of the split class"),
    k: Optional[int] = typer.Option(None, "--k"),
    second_k: Optional[int] = typer.Option(
        None, "--l", help="Also check psi^k psi^l = psi^kl"
    ),
    m: Optional[int] = typer.Option(
        None, "--m", help="Check psi^m through N_m instead"
    ),
    p: Optional[int] = typer.Option(None, "--p"),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """Adams operations on the split class of rank n."""
    config = RunConfig(
        "adams",
        m=m,
        n=n,
        p=p,
        k=k,
        second_k=second_k,
        output_format=output,
        output_path=out,
    )
    _execute(config, run_adams)


@app.command("homotopy")
def homotopy_command(
    m: int = typer.Option(..., "--m"),
    n: int = typer.Option(..., "--n"),
    p: int = typer.Option(..., "--p"),
    ell: int = typer.Option(1, "--ell"),
    descended: bool = typer.Option(
        False, "--descended", help="Check h_ell = v_ell ^ h on N_m(V) instead"
    ),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """(dh + hd) x = -(alpha_ell + 1) x on L_m(V, v_ell), or on N_m(V)."""
    config = RunConfig(
        "homotopy",
        m=m,
        n=n,
        p=p,
        ell=ell,
        descended=descended,
        output_format=output,
        output_path=out,
    )
    _execute(config, run_homotopy)


@app.command("equivariance")
def equivariance_command(
    m: int = typer.Option(..., "--m"),
    n: int = typer.Option(..., "--n"),
    p: int = typer.Option(..., "--p"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    trials: int = typer.Option(20, "--trials"),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """Random elementary and diagonal g commute with every differential."""
    config = RunConfig(
        "equivariance",
        m=m,
        n=n,
        p=p,
        seed=seed,
        trials=trials,
        output_format=output,
        output_path=out,
    )
    _execute(config, run_equivariance)


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise PreconditionError(f"expected comma-separated integers, got {text!r}")


@app.command("sweep")
def sweep_command(
    m_max: int = typer.Option(9, "--m-max", help="Largest m in the grid"),
    primes: str = typer.Option("2,3", "--primes", help="Comma-separated primes"),
    n_max: int = typer.Option(4, "--n-max", help="Largest n in the grid"),
    workers: int = typer.Option(1, "--workers", help="Cells computed concurrently"),
    output: str = typer.Option("text", "--output", help=OUTPUT_HELP),
    out: Optional[str] = typer.Option(None, "--out", help=OUT_HELP),
):
    """Cohomology, Frobenius comparison and identity over an (m, p, n) grid."""
    config = RunConfig(
        "sweep", m=m_max, n=n_max, output_format=output, output_path=out
    )

    def compute(_: RunConfig) -> Report:
        ps = _int_list(primes)
        for p in ps:
            Prime(p)
        return SweepPipeline(
            ms=range(1, m_max + 1), ps=ps, ns=range(1, n_max + 1), workers=workers
        ).run()

    _execute(config, compute)

