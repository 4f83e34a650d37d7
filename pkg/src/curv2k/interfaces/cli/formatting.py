"""
🖨️ OUTPUT FORMATS - table, json and csv renderings shared by every verb

📋 table - aligned columns, floats at 6 significant digits
🧾 json  - pydantic JSON; floats use the shortest repr that parses back to the same value
📑 csv   - header plus one row per record, scalar fields only
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Mapping, Sequence

from pydantic import BaseModel

FORMATS = ("table", "json", "csv")


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.6g}"
    if value is None:
        return "-"
    return str(value)


def render_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    cells = [list(header)] + [[format_cell(value) for value in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "\n".join("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells)


def scalar_fields(record: Mapping[str, Any]) -> dict[str, Any]:
    return {key: value for key, value in record.items() if not isinstance(value, (list, tuple, dict))}


def render_key_values(record: Mapping[str, Any]) -> str:
    return render_table(["field", "value"], scalar_fields(record).items())


def render_csv(records: Sequence[Mapping[str, Any]]) -> str:
    rows = [scalar_fields(record) for record in records]
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: repr(value) if isinstance(value, float) else value for key, value in row.items()})
    return buffer.getvalue().rstrip("\n")


def render_json(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True)


def render_json_lines(records: Iterable[Mapping[str, Any]]) -> str:
    return "\n".join(json.dumps(record) for record in records)
