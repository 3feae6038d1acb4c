"""JSON Lines persistence for EstimateRecord."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from pydantic import ValidationError

from gfflab.errors import RecordFormatError

from .models import EstimateRecord


def append_records(path: Path, records: Iterable[EstimateRecord]) -> int:
    """Append records as UTF-8 JSON lines; returns the number written."""
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "a", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(record.to_json_line())
            handle.write("\n")
            count += 1
    return count


def read_records(path: Path) -> list[EstimateRecord]:
    """Parse a JSONL result file.

    Raises:
        RecordFormatError: naming the first malformed line.
    """
    records = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RecordFormatError(str(path), line_number, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(payload, dict):
                raise RecordFormatError(str(path), line_number, "expected a JSON object")
            try:
                records.append(EstimateRecord(**payload))
            except ValidationError as exc:
                raise RecordFormatError(str(path), line_number, exc.errors()[0]["msg"]) from exc
    return records


def completed_cells(path: Path) -> set[str]:
    """Cell keys already present in ``path``; empty when the file does not exist."""
    if not path.exists():
        return set()
    return {record.cell for record in read_records(path)}
