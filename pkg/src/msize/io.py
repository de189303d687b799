"""Deterministic JSON output and small CSV readers."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np


def _normalize(obj):
    if isinstance(obj, dict):
        return {str(k): _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _normalize(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        x = float(f"{x:.12g}")
        return 0.0 if x == 0 else x
    return obj


def dumps(obj) -> str:
    """JSON with sorted keys, floats at 12 significant digits and +inf as "inf"."""
    return json.dumps(_normalize(obj), sort_keys=True, indent=2) + "\n"


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj))


def _data_rows(path):
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            cells = [c.strip() for c in row]
            if not cells or all(c == "" for c in cells) or cells[0].startswith("#"):
                continue
            yield lineno, cells


def read_columns(path) -> np.ndarray:
    """Numeric CSV as an (rows, columns) float array; a non-numeric first row is a header."""
    rows = []
    for lineno, cells in _data_rows(path):
        try:
            rows.append([float(c) for c in cells])
        except ValueError:
            if rows:
                raise ValueError(f"{path}:{lineno}: non-numeric value in {cells}") from None
            continue  # header
    if not rows:
        raise ValueError(f"{path}: no numeric rows")
    if len({len(r) for r in rows}) != 1:
        raise ValueError(f"{path}: rows have different lengths")
    return np.array(rows, dtype=float)


def read_edges(path) -> list[tuple[int, int]]:
    """Two-column CSV of 0-based vertex indices."""
    edges = []
    for lineno, cells in _data_rows(path):
        if len(cells) < 2:
            raise ValueError(f"{path}:{lineno}: expected two vertex indices")
        try:
            edges.append((int(cells[0]), int(cells[1])))
        except ValueError:
            if edges:
                raise ValueError(f"{path}:{lineno}: non-integer vertex index") from None
    return edges
