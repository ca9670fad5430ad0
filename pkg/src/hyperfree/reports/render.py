"""
Human-readable rendering of reports
"""

from typing import Any, Dict, List

from tabulate import tabulate

from hyperfree.reports.models import Report


def _cell(value: Any) -> str:
    if isinstance(value, list):
        if value and isinstance(value[0], dict):
            return f"{len(value)} entries"
        return ", ".join(str(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={v}" for k, v in sorted(value.items()))
    if value is None:
        return "-"
    return str(value)


def _key_value_table(payload: Dict[str, Any]) -> str:
    rows = [[key, _cell(payload[key])] for key in sorted(payload)]
    return tabulate(rows, headers=["Field", "Value"], tablefmt="simple")


def _record_table(records: List[Dict[str, Any]]) -> str:
    headers = sorted({key for record in records for key in record})
    rows = [[_cell(record.get(h)) for h in headers] for record in records]
    return tabulate(rows, headers=headers, tablefmt="simple")


def render_text(report: Report) -> str:
    """Tables for the scalar fields of the result, each list of records, and the certificate"""
    scalars = {
        k: v for k, v in report.result.items() if not _is_records(v) and not _is_block(v)
    }
    sections = [f"\n {report.command}"]
    if scalars:
        sections.append(_key_value_table(scalars))
    for key, value in sorted(report.result.items()):
        if _is_block(value):
            sections.append(f"\n {key}:\n{value.rstrip()}")
        elif _is_records(value):
            sections.append(f"\n {key}:")
            sections.append(_record_table(value))
    if report.certificate is not None:
        sections.append("\n certificate:")
        sections.append(_key_value_table(report.certificate))
    if report.timing is not None:
        sections.append(
            f"\n {report.timing.wall_seconds:.3f} s, {report.timing.rss_bytes / 2**20:.1f} MiB resident"
        )
    return "\n".join(sections)


def _is_records(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(v, dict) for v in value)


def _is_block(value: Any) -> bool:
    return isinstance(value, str) and "\n" in value
