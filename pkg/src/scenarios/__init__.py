"""Scenario documents, the bundled catalog and the runner behind the CLI."""

from .models import COVER_OPERATIONS, FINITE_OPERATIONS, HODGE_OPERATIONS, OPERATIONS, CochainSpec, Scenario, ScenarioParameters
from .operations import Context, SectionList, Subjects, oracle_check, resolve, run_operation
from .catalog import BUNDLED_SCENARIOS, EXAMPLE_KINDS, list_examples, load_scenario
from .runner import build_context, failed_checks, require_passed, run_reference, run_scenario, write_report

__all__ = [
    "COVER_OPERATIONS",
    "FINITE_OPERATIONS",
    "HODGE_OPERATIONS",
    "OPERATIONS",
    "CochainSpec",
    "Scenario",
    "ScenarioParameters",
    "Context",
    "SectionList",
    "Subjects",
    "oracle_check",
    "resolve",
    "run_operation",
    "BUNDLED_SCENARIOS",
    "EXAMPLE_KINDS",
    "list_examples",
    "load_scenario",
    "build_context",
    "failed_checks",
    "require_passed",
    "run_reference",
    "run_scenario",
    "write_report",
]
