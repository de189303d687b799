"""Multidimensional matching distance over a finite family of admissible pairs.

For each pair (l, b) both shapes are reduced to scalar functions, their corner
series are matched, and the distance is weighted by min_i l_i. The largest
weighted value is a lower bound for the natural pseudo-distance between the
two size pairs.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

from msize.errors import DimensionMismatch
from msize.foliation import AdmissiblePair, reduce
from msize.matching import d_match
from msize.shape import FilteredGraph
from msize.sizefn1d import CornerSeries, compute_corner_series


@dataclass(frozen=True)
class MultiDistEntry:
    pair: AdmissiblePair
    weight: float
    distance: float
    weighted: float


@dataclass(frozen=True)
class MultiDistReport:
    entries: tuple[MultiDistEntry, ...]
    d_match_sup: float

    @property
    def lower_bound(self) -> float:
        """Lower bound on the natural pseudo-distance (same number as d_match_sup)."""
        return self.d_match_sup

    @property
    def infinite(self) -> bool:
        return math.isinf(self.d_match_sup)

    def argmax(self) -> MultiDistEntry:
        return max(self.entries, key=lambda e: e.weighted)


def weighted_entry(pair: AdmissiblePair, a: CornerSeries, b: CornerSeries) -> MultiDistEntry:
    dist = d_match(a, b).cost
    return MultiDistEntry(pair, pair.weight, dist, pair.weight * dist)


def report_from_entries(entries: Sequence[MultiDistEntry]) -> MultiDistReport:
    if not entries:
        raise ValueError("at least one admissible pair is required")
    return MultiDistReport(tuple(entries), max(e.weighted for e in entries))


def compute_D_match(G1: FilteredGraph, G2: FilteredGraph, A: Sequence[AdmissiblePair]) -> MultiDistReport:
    if not A:
        raise ValueError("the admissible family A must be non-empty")
    if G1.k != G2.k:
        raise DimensionMismatch(f"measuring functions differ in dimension: {G1.k} vs {G2.k}")
    entries = []
    for pair in A:
        if pair.k != G1.k:
            raise DimensionMismatch(f"pair of dimension {pair.k} for k = {G1.k} shapes")
        cs1 = compute_corner_series(G1, reduce(G1, pair))
        cs2 = compute_corner_series(G2, reduce(G2, pair))
        entries.append(weighted_entry(pair, cs1, cs2))
    return report_from_entries(entries)


def grid_variation(report: MultiDistReport, grid_l: int, grid_b: int) -> float:
    """Largest change of the weighted distance between neighbouring grid pairs.

    Assumes entries in the l-major order produced by ``sample_admissible`` with
    k = 2. Purely empirical; returns 0 for a single pair.
    """
    if len(report.entries) != grid_l * grid_b:
        raise ValueError("report size does not match the grid shape")
    vals = [[report.entries[i * grid_b + j].weighted for j in range(grid_b)] for i in range(grid_l)]
    diffs = [0.0]
    for i in range(grid_l):
        for j in range(grid_b):
            if i + 1 < grid_l:
                diffs.append(abs(vals[i + 1][j] - vals[i][j]))
            if j + 1 < grid_b:
                diffs.append(abs(vals[i][j + 1] - vals[i][j]))
    return max(diffs)


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:.12g}"


def report_to_json(report: MultiDistReport) -> dict:
    return {
        "entries": [
            {
                "pair": e.pair.to_dict(),
                "weight": e.weight,
                "d_match": e.distance,
                "weighted": e.weighted,
            }
            for e in report.entries
        ],
        "d_match_sup": report.d_match_sup,
        "lower_bound": report.lower_bound,
        "infinite": report.infinite,
    }


def report_to_csv(report: MultiDistReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["l", "b", "weight", "d_match", "weighted"])
    for e in report.entries:
        writer.writerow([
            " ".join(_fmt(v) for v in e.pair.l),
            " ".join(_fmt(v) for v in e.pair.b),
            _fmt(e.weight),
            _fmt(e.distance),
            _fmt(e.weighted),
        ])
    return buf.getvalue()


def pseudo_distance_gap_report(report: MultiDistReport, fmt: str = "text") -> str:
    """Human-readable table (``fmt="text"``) or JSON summary of a report."""
    if fmt == "json":
        from msize.io import dumps

        return dumps(report_to_json(report))
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")

    header = f"{'l':>28}  {'b':>28}  {'min l':>10}  {'d_match':>12}  {'weighted':>12}"
    lines = [header, "-" * len(header)]
    for e in report.entries:
        l = "(" + ", ".join(f"{v:.6g}" for v in e.pair.l) + ")"
        b = "(" + ", ".join(f"{v:.6g}" for v in e.pair.b) + ")"
        lines.append(f"{l:>28}  {b:>28}  {e.weight:10.6g}  {_fmt(e.distance):>12}  {_fmt(e.weighted):>12}")
    lines.append("")
    lines.append(f"D_match over {len(report.entries)} admissible pair(s): {_fmt(report.d_match_sup)}")
    if report.infinite:
        lines.append("at least one pair gives +inf: the shapes have different numbers of components")
    lines.append(f"natural pseudo-distance d >= {_fmt(report.lower_bound)}")
    return "\n".join(lines)
