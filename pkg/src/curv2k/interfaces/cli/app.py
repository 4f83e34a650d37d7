"""
💻 CURV2K COMMAND LINE - thresholds, spectra, identity checks and extremum certificates

Usage:
    curv2k theta --n 4 --exact                       # 1/11
    curv2k spectrum --model sphere:n=4,k=1 --format json
    curv2k verify --model s2xs2                      # exit 1 if any applicable identity fails
    curv2k extremum --n 4 --budget 100000 --seed 0   # exit 1 on an unexpected counterexample
    curv2k sharpness --n 5 --epsilon 1e-6            # exit 1 if no witness
    curv2k corpus --count 20 --n-min 4 --n-max 8

EXIT CODES:
0 success, 1 failed identity or unexpected counterexample, 2 usage error or infeasible model.
Logs go to stderr; stdout is deterministic for fixed arguments and seed.
"""

from __future__ import annotations

import logging
import sys
from fractions import Fraction
from typing import Sequence

import click

from curv2k.core.exceptions import Curv2kError, ModelSpecError
from curv2k.interfaces.cli.formatting import (
    FORMATS,
    render_csv,
    render_json,
    render_json_lines,
    render_key_values,
    render_table,
)
from curv2k.modules.extremum import (
    SimplexOracle,
    check_condition,
    format_fraction,
    sharpness_witness,
    theta as threshold,
)
from curv2k.modules.identities import IdentityReport, run_identity_suite, to_json_lines, to_table, verify_corpus
from curv2k.modules.identities.report import JSON_FIELDS
from curv2k.modules.model_spaces import ModelSpec, build_model, parse_model_spec
from curv2k.modules.second_kind import second_kind_matrix, spectrum
from curv2k.settings import settings

logger = logging.getLogger("curv2k.cli")

NAMED_CORPUS = (
    "sphere:n=4,k=1",
    "sphere:n=5,k=2",
    "flat:n=4",
    "s2xs2",
    "products:p=2,q=3,r1=1",
    "cpm:m=2,c=4",
    "cpm:m=3,c=4",
)


class ModelSpecParam(click.ParamType):
    name = "model"

    def convert(self, value, param, ctx) -> ModelSpec:
        if isinstance(value, ModelSpec):
            return value
        try:
            return parse_model_spec(value)
        except ModelSpecError as e:
            self.fail(str(e), param, ctx)


class FractionParam(click.ParamType):
    """Exact rational from '1/11', '0.25' or '1e-6'."""

    name = "rational"

    def convert(self, value, param, ctx) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            self.fail(f"'{value}' is not a rational number: {str(e)}", param, ctx)


MODEL = ModelSpecParam()
RATIONAL = FractionParam()

format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True, help="Output format"
)


def _build(spec: ModelSpec):
    try:
        return build_model(spec)
    except ModelSpecError as e:
        raise click.BadParameter(str(e), param_hint="--model") from e


def _check_dimension(n: int) -> None:
    if n < 4:
        raise click.BadParameter(f"n must be at least 4, got {n}", param_hint="--n")


@click.group()
@click.version_option(version="0.1.0", prog_name="curv2k")
@click.option("--verbose", is_flag=True, help="Log progress at INFO level on stderr")
def cli(verbose: bool):
    """Curvature operator of the second kind: thresholds, spectra, identities and extremum certificates."""
    logging.basicConfig(
        level=logging.INFO if verbose else settings.LOG_LEVEL,
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    if verbose:
        logging.getLogger("curv2k").setLevel(logging.INFO)


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Dimension, at least 4")
@click.option("--exact", is_flag=True, help="Print the exact rational")
@format_option
@click.pass_context
def theta(ctx: click.Context, n: int, exact: bool, fmt: str):
    """Threshold theta(n)."""
    _check_dimension(n)
    payload = threshold(n).to_payload()
    if fmt == "json":
        click.echo(render_json(payload))
    elif fmt == "csv":
        click.echo(render_csv([payload.model_dump()]))
    else:
        click.echo(payload.theta if exact else f"{payload.theta_float:.6g}")
    ctx.exit(0)


@cli.command("spectrum")
@click.option("--model", "spec", type=MODEL, required=True, help="Model space, e.g. sphere:n=4,k=1")
@format_option
@click.pass_context
def spectrum_command(ctx: click.Context, spec: ModelSpec, fmt: str):
    """Eigenvalues of the second-kind operator of a model space."""
    tensor = _build(spec)
    result = spectrum(second_kind_matrix(tensor))
    payload = result.to_payload()

    if fmt == "json":
        click.echo(render_json(payload))
    elif fmt == "csv":
        click.echo(render_csv([payload.model_dump()]))
    else:
        click.echo(render_table(["j", "lambda"], enumerate(payload.eigenvalues, start=1)))
        rows = [("model", spec.label), ("mean", payload.mean), ("ratio", result.ratio), ("trace_check", payload.trace_check)]
        if spec.n >= 4:
            rows.append(("condition", check_condition(result).status))
        click.echo(render_table(["field", "value"], rows))
    ctx.exit(0)


def _emit_reports(reports: list[IdentityReport], fmt: str) -> None:
    if fmt == "json":
        click.echo(to_json_lines(reports))
    elif fmt == "csv":
        click.echo(render_csv([report.model_dump(by_alias=True, include=set(JSON_FIELDS)) for report in reports]))
    else:
        click.echo(to_table(reports))


@cli.command()
@click.option("--model", "spec", type=MODEL, required=True, help="Model space to verify")
@click.option("--theta", "theta_value", type=RATIONAL, default=None, help="Threshold for the lemma checks")
@click.option("--tolerance", type=float, default=None, help="Relative tolerance")
@format_option
@click.pass_context
def verify(ctx: click.Context, spec: ModelSpec, theta_value: Fraction | None, tolerance: float | None, fmt: str):
    """Run every applicable pointwise identity on a model space."""
    tensor = _build(spec)
    reports = run_identity_suite(
        tensor,
        None if theta_value is None else float(theta_value),
        symmetric=spec.is_symmetric_space,
        tolerance=tolerance,
    )
    applicable = [report for report in reports if report.applicable]
    for report in reports:
        if not report.applicable:
            logger.info(f"{spec.label}: skipped {report.name} ({report.detail})")

    _emit_reports(applicable, fmt)
    ctx.exit(0 if all(report.passed for report in applicable) else 1)


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Dimension, at least 4")
@click.option("--theta", "theta_value", type=RATIONAL, default=None, help="Pinning level (default theta(n))")
@click.option("--budget", type=int, default=settings.ORACLE_BUDGET, show_default=True, help="Random samples")
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=settings.SEED,
    envvar="CURV2K_SEED",
    show_default=True,
    help="Base seed",
)
@click.option("--workers", type=int, default=settings.ORACLE_WORKERS, show_default=True, help="Sampling threads")
@click.option("--exact", is_flag=True, help="Show exact candidate values in the table")
@format_option
@click.pass_context
def extremum(
    ctx: click.Context,
    n: int,
    theta_value: Fraction | None,
    budget: int,
    seed: int,
    workers: int,
    exact: bool,
    fmt: str,
):
    """Certify min f >= 0 on the constrained simplex with the brute-force oracle."""
    _check_dimension(n)
    if budget < 1:
        raise click.BadParameter(f"budget must be at least 1, got {budget}", param_hint="--budget")
    try:
        report = SimplexOracle(n, theta_value, workers=workers).run(budget, seed)
    except Curv2kError as e:
        raise click.BadParameter(str(e), param_hint="--theta") from e

    if fmt == "json":
        click.echo(render_json(report))
    elif fmt == "csv":
        click.echo(render_csv([report.model_dump()]))
    else:
        click.echo(render_key_values(report.model_dump()))
        values = report.candidate_values_exact if exact and report.candidate_values_exact else report.candidate_values
        click.echo(render_table(["m", "f(lambda^m)"], enumerate(values)))

    theta_used = threshold(n).exact if theta_value is None else theta_value
    unexpected = report.conclusion == "counterexample_found" and theta_used <= threshold(n).exact
    ctx.exit(1 if unexpected else 0)


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Dimension, at least 4")
@click.option("--epsilon", type=RATIONAL, required=True, help="Excess over theta(n), e.g. 1e-6 or 1/100")
@format_option
@click.pass_context
def sharpness(ctx: click.Context, n: int, epsilon: Fraction, fmt: str):
    """Exact witness f(lambda^1) < 0 at theta(n) + epsilon."""
    _check_dimension(n)
    if epsilon < 0:
        raise click.BadParameter(f"epsilon must be non-negative, got {format_fraction(epsilon)}", param_hint="--epsilon")
    witness = sharpness_witness(n, epsilon)
    payload = witness.to_payload()

    if fmt == "json":
        click.echo(render_json(payload))
    elif fmt == "csv":
        click.echo(render_csv([payload.model_dump()]))
    else:
        click.echo(render_key_values(payload.model_dump()))
    ctx.exit(0 if witness.is_witness else 1)


@cli.command()
@click.option("--count", type=int, default=10, show_default=True, help="Random Einstein tensors per dimension")
@click.option("--n-min", type=int, default=4, show_default=True)
@click.option("--n-max", type=int, default=8, show_default=True)
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=settings.SEED,
    envvar="CURV2K_SEED",
    show_default=True,
    help="First seed",
)
@click.option("--amp", type=float, default=settings.DEFAULT_WEYL_AMPLITUDE, show_default=True, help="Weyl amplitude")
@click.option("--workers", type=int, default=1, show_default=True, help="Verification threads")
@format_option
@click.pass_context
def corpus(
    ctx: click.Context, count: int, n_min: int, n_max: int, seed: int, amp: float, workers: int, fmt: str
):
    """Identity suite over the named model spaces plus seeded random Einstein tensors."""
    if n_min < 4 or n_max < n_min:
        raise click.BadParameter(f"need 4 <= n-min <= n-max, got [{n_min}, {n_max}]", param_hint="--n-min")

    specs = [parse_model_spec(text) for text in NAMED_CORPUS]
    specs += [
        parse_model_spec(f"random:n={n},seed={seed + index},amp={amp!r}")
        for n in range(n_min, n_max + 1)
        for index in range(count)
    ]
    tensors = [_build(spec) for spec in specs]
    results = verify_corpus(tensors, symmetric=[spec.is_symmetric_space for spec in specs], workers=workers)

    summary, records, all_passed = [], [], True
    for spec, reports in zip(specs, results):
        applicable = [report for report in reports if report.applicable]
        failed = [report.name for report in applicable if not report.passed]
        all_passed = all_passed and not failed
        summary.append((spec.label, len(applicable), len(applicable) - len(failed), ",".join(failed) or "-"))
        records += [
            {"model": spec.label, **report.model_dump(by_alias=True, include=set(JSON_FIELDS))} for report in applicable
        ]

    if fmt == "json":
        click.echo(render_json_lines(records))
    elif fmt == "csv":
        click.echo(render_csv(records))
    else:
        click.echo(render_table(["model", "checks", "passed", "failed"], summary))
    ctx.exit(0 if all_passed else 1)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="curv2k", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
