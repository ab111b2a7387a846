"""CSV and manifest output.

Data files are deterministic: RFC-4180-style CSV with a header row, floats at
17 significant digits (value-preserving), no timestamps.  Run metadata with a
timestamp lives only in JSON manifests.
"""

from __future__ import annotations

import csv
import json
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .dynamics import TimeSeries
from .scan import SweepResult

__all__ = [
    "format_value",
    "write_csv",
    "write_timeseries_distribution",
    "write_timeseries_observables",
    "write_sweep",
    "write_manifest",
]


def format_value(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.17g}"
    return str(x)


def write_csv(path, header, rows) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(x) for x in row])


def write_timeseries_distribution(series: TimeSeries, path) -> None:
    """Columns: time, P_0 .. P_N."""
    header = ["time"] + [f"P_{i}" for i in range(series.n_atoms + 1)]
    rows = (
        [t] + list(p) for t, p in zip(series.times, series.probabilities)
    )
    write_csv(path, header, rows)


def write_timeseries_observables(series: TimeSeries, path) -> None:
    """Columns: time, mean_left, variance_left."""
    rows = zip(series.times, series.mean, series.variance)
    write_csv(path, ["time", "mean_left", "variance_left"], rows)


def write_sweep(sweep: SweepResult, path, sidecar: bool = True) -> None:
    """One row per record, columns from the record keys (first record wins).

    Unless sidecar=False, a JSON metadata file with the full parameter record
    (plus grid span and a timestamp) lands next to the CSV for reproducibility.
    """
    path = Path(path)
    if not sweep.records:
        write_csv(path, [sweep.axis], [])
    else:
        header = list(sweep.records[0].keys())
        rows = ([rec[k] for k in header] for rec in sweep.records)
        write_csv(path, header, rows)
    if sidecar:
        meta = dict(sweep.metadata)
        meta.update(
            {
                "axis": sweep.axis,
                "grid_points": int(sweep.grid.size),
                "grid_min": float(sweep.grid[0]) if sweep.grid.size else None,
                "grid_max": float(sweep.grid[-1]) if sweep.grid.size else None,
                "csv": path.name,
            }
        )
        write_manifest(path.with_suffix(".json"), meta)


def write_manifest(path, payload: dict) -> None:
    doc = dict(payload)
    doc["generated_at"] = datetime.now(timezone.utc).isoformat()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
