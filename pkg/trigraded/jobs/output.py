"""Writing records to the output stream."""

from __future__ import annotations

import json
import sys
from typing import Any, Optional, TextIO

from trigraded.data.tables import GroupTable, table_to_records, write_records, write_tsv


def emit(payload: Any, out: Optional[TextIO] = None) -> None:
    """One JSON record per line."""
    out = out or sys.stdout
    if hasattr(payload, "to_line"):
        out.write(payload.to_line() + "\n")
    else:
        out.write(json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n")


def emit_table(table: GroupTable, fmt: str = "jsonl", out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    records = table_to_records(table)
    if fmt == "tsv":
        return write_tsv(records, out)
    return write_records(records, out)
