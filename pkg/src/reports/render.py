"""Rendering scenario reports as canonical JSON records or plain tables."""

from typing import Any, Dict, List

from src.utils.hashing import canonical_json, report_digest

from .models import ScenarioReport


def seal(report: ScenarioReport) -> ScenarioReport:
    """Attach the digest of the report body (everything but the digest)."""
    body = report.model_dump(mode="json", exclude={"digest"})
    return report.model_copy(update={"digest": report_digest(body)})


def render_record(report: ScenarioReport) -> str:
    return canonical_json(report.model_dump(mode="json")) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "(" + ",".join(_cell(v) for v in value) + ")"
    return str(value)


def _table(rows: List[Dict[str, Any]]) -> List[str]:
    headers = [k for k, v in rows[0].items() if not isinstance(v, (dict, list)) or k == "ranks"]
    body = [[_cell(row.get(h)) for h in headers] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in body)) for i, h in enumerate(headers)]
    lines = ["  " + "  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines += ["  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in body]
    return lines


def render_table(report: ScenarioReport) -> str:
    """Tabular projection of the same record."""
    lines = [
        f"scenario: {report.scenario} ({report.kind})",
        f"schema: {report.schema_version}",
        f"parameters: " + ", ".join(f"{k}={_cell(v)}" for k, v in sorted(report.parameters.items())),
        "",
    ]
    for section in report.sections:
        lines.append(f"== {section.operation} [{'PASS' if section.passed else 'FAIL'}]")
        data = section.report
        for key in sorted(data):
            value = data[key]
            if key == "checks":
                continue
            if isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"{key}:")
                lines.extend(_table(value))
            elif isinstance(value, dict):
                if value and all(not isinstance(v, (dict, list)) for v in value.values()):
                    lines.append(f"{key}: " + ", ".join(f"{k}={_cell(v)}" for k, v in sorted(value.items())))
            elif not isinstance(value, list) or all(not isinstance(v, list) for v in value):
                lines.append(f"{key}: {_cell(value)}")
        for entry in data.get("checks", []):
            mark = "PASS" if entry["passed"] else "FAIL"
            detail = f" {entry['detail']}" if entry.get("detail") else ""
            witness = f" witness: {entry['witness']}" if entry.get("witness") else ""
            lines.append(f"  [{mark}] {entry['invariant']}{detail}{witness}")
        lines.append("")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    lines.append(f"digest: {report.digest}")
    return "\n".join(lines) + "\n"


def render(report: ScenarioReport, fmt: str) -> str:
    if fmt == "table":
        return render_table(report)
    return render_record(report)
