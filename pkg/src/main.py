"""Command line entry point."""

import click
from pydantic import ValidationError

from src.config import settings
from src.errors import InputError, VerificationError
from src.scenarios import EXAMPLE_KINDS, list_examples, load_scenario, require_passed, run_scenario, write_report
from src.utils.logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFICATION = 2


@click.group()
@click.option("--log-level", default=None, help="Override the configured log level")
def cli(log_level):
    """Exact equivariant and coinvariant cohomology of cell complexes."""
    setup_logging(log_level)


@cli.command()
@click.argument("scenario")
@click.option("--window-radius", type=click.IntRange(1, settings.max_window_radius), default=None,
              help="Window radius for cover scenarios")
@click.option("--max-degree", type=click.IntRange(0), default=None, help="Highest degree to report")
@click.option("--cutoff", type=click.Choice(["domain", "split"]), default=None, help="Cutoff function on covers")
@click.option("--format", "fmt", type=click.Choice(["record", "table"]), default=None, help="Report format")
@click.option("--out", default=None, help="Directory for report files")
@click.pass_context
def run(ctx, scenario, window_radius, max_degree, cutoff, fmt, out):
    """Run SCENARIO (a bundled name or a scenario file)."""
    try:
        document, base = load_scenario(scenario)
        report = run_scenario(document, base, window_radius=window_radius, max_degree=max_degree, cutoff=cutoff)
    except (InputError, ValidationError, FileNotFoundError) as e:
        logger.error(f"Scenario {scenario}: {e}")
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_INPUT)

    fmt = fmt or document.format or settings.report_format
    path = write_report(report, fmt, out)
    click.echo(f"{report.scenario}: {'PASS' if report.passed else 'FAIL'} -> {path}")
    try:
        require_passed(report)
    except VerificationError as e:
        logger.warning(f"Scenario {report.scenario}: {e}")
        for operation, invariant, witness in e.failures:
            click.echo(f"  {operation}: {invariant} witness: {witness}", err=True)
        ctx.exit(EXIT_VERIFICATION)
    ctx.exit(EXIT_OK)


@cli.command("list-examples")
@click.option("--kind", default=None, help=f"One of {', '.join(EXAMPLE_KINDS)}")
@click.pass_context
def list_examples_cmd(ctx, kind):
    """List bundled complexes, actions, covers and scenarios."""
    try:
        rows = list_examples(kind)
    except InputError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    width = max(len(name) for _, name, _ in rows)
    for k, name, text in rows:
        click.echo(f"{k:<9} {name:<{width}}  {text}")


if __name__ == "__main__":
    cli()
