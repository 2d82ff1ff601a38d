"""
==========================
Year: 2026
==========================
This module contains the serialisation of command results to JSON, CSV and human-readable tables.
"""

import csv
import dataclasses
import io
import json
from typing import Any, Dict, List, Optional, Sequence

from tabulate import tabulate

from fracvuln.core.model import OutputFormat
from fracvuln.core.util import full_precision


@dataclasses.dataclass
class CommandResult:
    """
    document is the complete JSON result. header and rows form the tabular view used for CSV and table output, and
    notes are short summary lines written as '#' comments in CSV and below the table otherwise.
    """
    document: Dict[str, Any]
    header: List[str]
    rows: List[Sequence[Any]]
    notes: List[str] = dataclasses.field(default_factory=list)
    exit_code: int = 0


def to_json_text(document: Dict[str, Any]) -> str:
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def to_csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]], notes: Sequence[str] = ()) -> str:
    buffer = io.StringIO()
    for note in notes:
        buffer.write(f"# {note}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([full_precision(value) for value in row])
    return buffer.getvalue()


def to_table_text(header: Sequence[str], rows: Sequence[Sequence[Any]], notes: Sequence[str] = ()) -> str:
    cells = [["" if value is None else value for value in row] for row in rows]
    table = tabulate(cells, headers=list(header), tablefmt="github", floatfmt=".4f")
    return "\n".join([table] + list(notes)) + "\n"


def render(result: CommandResult, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.CSV:
        return to_csv_text(result.header, result.rows, result.notes)
    if output_format == OutputFormat.TABLE:
        return to_table_text(result.header, result.rows, result.notes)
    return to_json_text(result.document)


def write_output(text: str, path: Optional[str] = None):
    if path is None:
        print(text, end="")
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
