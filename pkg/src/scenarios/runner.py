"""Running a scenario end to end and writing its report."""

import contextvars
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

from src.config import settings
from src.errors import VerificationError
from src.reports.models import ReportSection, ScenarioReport, check
from src.reports.render import render, seal
from src.utils.logging import get_logger, scenario_context
from src.utils.performance import measure_performance, perf_monitor

from .catalog import load_scenario
from .models import Scenario
from .operations import Context, resolve, run_operation

logger = get_logger(__name__)


def build_context(scenario: Scenario, base: Optional[Path] = None, window_radius: Optional[int] = None,
                  max_degree: Optional[int] = None, cutoff: Optional[str] = None) -> Context:
    """Command-line values override the scenario's, which override the settings."""
    params = scenario.parameters
    max_degree = max_degree if max_degree is not None else params.max_degree
    if scenario.kind == "cover" and max_degree is not None:
        logger.warning(f"max_degree={max_degree} does not apply to cover scenarios; every degree is reported")
    return Context(
        scenario=scenario,
        subjects=resolve(scenario, base),
        radius=window_radius or params.window_radius or settings.default_window_radius,
        cutoff=cutoff or params.cutoff or settings.default_cutoff,
        max_degree=max_degree,
    )


@measure_performance("scenario.run")
def run_scenario(scenario: Scenario, base: Optional[Path] = None, **overrides) -> ScenarioReport:
    ctx = build_context(scenario, base, **overrides)

    with scenario_context(scenario.name):
        logger.info(f"Running {scenario.kind} scenario: {len(scenario.operations)} operations")
        with ThreadPoolExecutor(max_workers=settings.max_workers) as pool:
            # each worker runs in a copy of this context so its records keep the scenario tag
            futures = [
                pool.submit(contextvars.copy_context().run, run_operation, ctx, op)
                for op in scenario.operations
            ]
            results = [f.result() for f in futures]
        logger.debug(f"Timings so far: {perf_monitor.summary()}")

    sections = []
    checks = []
    for op, result in zip(scenario.operations, results):
        passed = result.passed
        sections.append(ReportSection(operation=op, report=result.model_dump(mode="json"), passed=passed))
        checks.append(check(f"section.{op}", passed, witness="see section ledger"))
        if not passed:
            logger.warning(f"Scenario {scenario.name}: {op} failed")

    parameters = {"window_radius": ctx.radius, "cutoff": ctx.cutoff, "max_degree": ctx.max_degree}
    if scenario.kind != "cover":
        parameters.pop("window_radius")
        parameters.pop("cutoff")
    report = ScenarioReport(
        schema_version=settings.schema_version,
        scenario=scenario.name,
        kind=scenario.kind,
        parameters=parameters,
        sections=sections,
        checks=checks,
        passed=all(c.passed for c in checks),
    )
    return seal(report)


def run_reference(reference: str, **overrides) -> ScenarioReport:
    scenario, base = load_scenario(reference)
    return run_scenario(scenario, base, **overrides)


def write_report(report: ScenarioReport, fmt: str, out: Optional[str] = None) -> Path:
    """Write ``<out>/<scenario>.json`` (record) or ``.txt`` (table)."""
    directory = Path(out or settings.output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{report.scenario}.{'txt' if fmt == 'table' else 'json'}"
    path.write_text(render(report, fmt), encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path


def failed_checks(report: ScenarioReport) -> List[Tuple[str, str, Optional[str]]]:
    """(operation, invariant, witness) for every failing check in the section ledgers."""
    failures = []
    for section in report.sections:
        entries = list(section.report.get("checks", []))
        entries += [c for item in section.report.get("items", []) for c in item.get("checks", [])]
        failures += [(section.operation, e["invariant"], e.get("witness")) for e in entries if not e["passed"]]
    return failures


def require_passed(report: ScenarioReport):
    """Raise ``VerificationError`` unless every check of the report passed."""
    if report.passed:
        return
    failures = failed_checks(report)
    if not failures:
        failures = [("scenario", c.invariant, c.witness) for c in report.checks if not c.passed]
    operation, invariant, witness = failures[0]
    raise VerificationError(f"{operation}: {invariant}", witness, failures)
