"""
Result emitters for the CLI: JSON, CSV and a plain-text table.

Results go to standard output; diagnostics go through loguru to standard error.
"""

import csv
import json
import sys
from typing import Any, Dict, List, Optional, TextIO

from src.config.run_config import OutputFormat


def _scalar(value: Any) -> Any:
    if isinstance(value, (list, dict)):
        return json.dumps(value, default=str)
    return value


def emit(
    payload: Dict[str, Any],
    fmt: OutputFormat = OutputFormat.JSON,
    rows: Optional[List[Dict[str, Any]]] = None,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Write one command result.

    JSON writes the payload (rows included under "rows" when given). CSV writes
    the rows, or a single row of the payload's fields. Pretty writes key/value
    lines followed by an aligned table of the rows.
    """
    stream = stream or sys.stdout
    if fmt is OutputFormat.JSON:
        document = dict(payload)
        if rows is not None:
            document["rows"] = rows
        stream.write(json.dumps(document, indent=2, default=str) + "\n")
    elif fmt is OutputFormat.CSV:
        table = rows if rows is not None else [{key: _scalar(value) for key, value in payload.items()}]
        if not table:
            return
        writer = csv.DictWriter(stream, fieldnames=list(table[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(table)
    else:
        width = max((len(key) for key in payload), default=0)
        for key, value in payload.items():
            stream.write(f"{key.ljust(width)}  {_scalar(value)}\n")
        if rows:
            _write_table(rows, stream)


def _write_table(rows: List[Dict[str, Any]], stream: TextIO) -> None:
    columns = list(rows[0])
    widths = {column: max(len(column), *(len(str(row[column])) for row in rows)) for column in columns}
    stream.write("\n" + "  ".join(column.rjust(widths[column]) for column in columns) + "\n")
    for row in rows:
        stream.write("  ".join(str(row[column]).rjust(widths[column]) for column in columns) + "\n")
