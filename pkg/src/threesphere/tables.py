"""Deterministic CSV/JSON tables and run manifests.

Floats are written with 17 significant digits, which round-trips every
double exactly; the reader recovers the original values bit for bit.
Data files never contain timestamps, so re-running a configuration
reproduces them byte for byte; wall-clock information lives only in the
sidecar manifest.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

__all__ = [
    "format_value",
    "write_table",
    "read_table",
    "manifest_path",
    "write_manifest",
]

# Columns parsed back as integers; everything else numeric is a float.
_INT_FIELDS = {"n", "seed"}


def format_value(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _write_csv(path: Path, fieldnames: list, rows: list) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([format_value(row[name]) for name in fieldnames])


def _write_json(path: Path, fieldnames: list, rows: list) -> None:
    document = {
        "columns": list(fieldnames),
        "rows": [{name: row[name] for name in fieldnames} for row in rows],
    }
    with open(path, "w", newline="") as handle:
        json.dump(document, handle, indent=2)
        handle.write("\n")


def write_table(path, fieldnames: list, rows: list, fmt: str = "csv") -> None:
    """Write rows (dicts) in the given column order as CSV or JSON."""
    path = Path(path)
    if fmt == "csv":
        _write_csv(path, fieldnames, rows)
    elif fmt == "json":
        _write_json(path, fieldnames, rows)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _convert(name: str, text: str):
    if name in _INT_FIELDS:
        return int(text)
    try:
        return float(text)
    except ValueError:
        return text


def read_table(path) -> list:
    """Read back a table written by :func:`write_table`, values restored exactly."""
    path = Path(path)
    text = path.read_text()
    if text.lstrip().startswith("{"):
        document = json.loads(text)
        return [dict(row) for row in document["rows"]]
    rows = []
    with open(path, newline="") as handle:
        for row in csv.DictReader(handle):
            rows.append({name: _convert(name, value) for name, value in row.items()})
    return rows


def manifest_path(data_path) -> Path:
    return Path(str(data_path) + ".manifest.json")


def write_manifest(data_path, manifest: dict) -> Path:
    """Write the sidecar manifest for a data file and return its path."""
    path = manifest_path(data_path)
    with open(path, "w", newline="") as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True)
        handle.write("\n")
    return path
