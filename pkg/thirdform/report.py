"""Serialization of check records into the report stream.

Three formats are supported:

- `json`: a single object `{"schema": 1, "generated_at": ..., "command": ...,
  "records": [...], "passed": bool}`, with every record tagged by its "kind",
- `csv`: a header row with the union of record columns (`kind` first), one row per record,
- `text`: one human-readable line per record, followed by a summary line.
"""

import csv
import json
from datetime import datetime, timezone
from typing import Optional, Sequence, TextIO

from .model import CSVValue, JSONValue, Record
from .options import OutputFormat

SCHEMA_VERSION = 1


def record_json(record: Record) -> dict[str, JSONValue]:
    """record_json returns the JSON representation of a record, with the "kind" key first."""
    return {"kind": record.record_kind(), **record.as_json()}


def report_json(
    records: Sequence[Record],
    command: str,
    generated_at: Optional[datetime] = None,
) -> dict[str, JSONValue]:
    """report_json builds the top-level JSON report object.
    generated_at is omitted from the report if None.

    >>> report_json([], "check")
    {'schema': 1, 'command': 'check', 'records': [], 'passed': True}
    """
    report: dict[str, JSONValue] = {"schema": SCHEMA_VERSION}
    if generated_at is not None:
        report["generated_at"] = generated_at.isoformat(timespec="seconds")
    report["command"] = command
    report["records"] = [record_json(r) for r in records]
    report["passed"] = all(r.passed for r in records)
    return report


def csv_columns(records: Sequence[Record]) -> list[str]:
    """csv_columns returns the union of the CSV columns of all records,
    in order of first appearance, with "kind" always first."""
    columns: dict[str, None] = {"kind": None}
    for record in records:
        columns.update(dict.fromkeys(record.csv_row()))
    return list(columns)


def _csv_cell(value: CSVValue) -> str:
    if value is None:
        return ""
    elif isinstance(value, bool):
        return "1" if value else "0"
    return str(value)


def write_csv(records: Sequence[Record], out: TextIO) -> None:
    columns = csv_columns(records)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for record in records:
        row = record.csv_row()
        row["kind"] = record.record_kind()
        w.writerow(_csv_cell(row.get(column)) for column in columns)


def _text_line(record: Record) -> str:
    status = "PASS" if record.passed else "FAIL"
    fields = ", ".join(
        f"{key}={value}"
        for key, value in record.csv_row().items()
        if key != "passed" and value is not None
    )
    return f"{status} {record.record_kind()}: {fields}"


def write_text(records: Sequence[Record], command: str, out: TextIO) -> None:
    for record in records:
        out.write(_text_line(record))
        out.write("\n")
    failed = sum(1 for r in records if not r.passed)
    out.write(f"{command}: {len(records)} record(s), {failed} failed\n")


def write_report(
    records: Sequence[Record],
    command: str,
    format: OutputFormat,
    out: TextIO,
    timestamp: bool = True,
) -> None:
    """write_report serializes the records onto `out` in the requested format.
    With `timestamp=False` the JSON report is byte-identical for identical records."""
    if format == "json":
        generated_at = datetime.now(timezone.utc) if timestamp else None
        json.dump(report_json(records, command, generated_at), out, indent=2, ensure_ascii=False)
        out.write("\n")
    elif format == "csv":
        write_csv(records, out)
    else:
        write_text(records, command, out)
