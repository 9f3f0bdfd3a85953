"""Report serialisation: JSON, TSV and a human-readable rendering."""

from __future__ import annotations

import json
from typing import Any

from jinja2 import Environment, PackageLoader, StrictUndefined

from turanlab.config.settings import OutputFormat
from turanlab.errors import LabError
from turanlab.lab.models import VerificationReport


TSV_COLUMNS = ("claim", "anchor", "status", "reason", "evidence")

_env = Environment(
    loader=PackageLoader("turanlab.lab", "templates"),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
    autoescape=False,
)


def _dumps(payload: Any, *, indent: int | None = None) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=indent, separators=None if indent else (",", ":"))


def _tsv_cell(value: str) -> str:
    return value.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def report_to_json(report: VerificationReport) -> str:
    return _dumps(report.model_dump(mode="json"), indent=2) + "\n"


def report_to_tsv(report: VerificationReport) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for check in report.checks:
        row = (
            check.claim,
            check.anchor,
            check.status.value,
            check.reason.value if check.reason else "",
            _dumps(check.evidence),
        )
        lines.append("\t".join(_tsv_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def report_to_human(report: VerificationReport) -> str:
    template = _env.get_template("report.txt.j2")
    return template.render(report=report, params=sorted(report.params.items()), stats=report.stats)


def emit_report(report: VerificationReport, fmt: OutputFormat | str = OutputFormat.JSON) -> bytes:
    """Serialise ``report``; output depends only on its content."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return report_to_json(report).encode("utf-8")
    if fmt is OutputFormat.TSV:
        return report_to_tsv(report).encode("utf-8")
    if fmt is OutputFormat.HUMAN:
        return report_to_human(report).encode("utf-8")
    raise LabError(f"reports cannot be written as {fmt.value}", code="format_unsupported", phase="lab")


__all__ = ["TSV_COLUMNS", "emit_report", "report_to_human", "report_to_json", "report_to_tsv"]
