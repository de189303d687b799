"""Dimension-0 vineyards as a 3-dimensional size function on M x I.

A homotopy f_t between two scalar functions on a graph is sampled at uniformly
spaced times. The product graph carries chi(P, t) = (f_t(P), t, -t); the rank
of H_0 of f_t at (x, y) equals the boundary count of the product's size
function at ((x, t, -t), (y, t, -t)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from msize.io import read_columns, read_edges
from msize.shape import FilteredGraph, as_point, count_meeting


@dataclass(frozen=True, eq=False)
class HomotopySample:
    """Topology of the base graph plus one scalar array per sampled time."""

    vertex_count: int
    edges: np.ndarray
    frames: np.ndarray  # (frame_count, vertex_count)

    def __post_init__(self):
        frames = np.array(self.frames, dtype=float)
        if frames.ndim != 2 or frames.shape[0] < 2:
            raise ValueError("a homotopy sample needs at least two frames")
        if frames.shape[1] != self.vertex_count:
            raise ValueError(f"each frame needs {self.vertex_count} values, got {frames.shape[1]}")
        base = FilteredGraph(np.zeros(self.vertex_count), self.edges)
        frames.setflags(write=False)
        object.__setattr__(self, "frames", frames)
        object.__setattr__(self, "edges", base.edges)

    @property
    def frame_count(self) -> int:
        return self.frames.shape[0]

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.frame_count)

    def frame_graph(self, j: int) -> FilteredGraph:
        return FilteredGraph(self.frames[j], self.edges)


def load_homotopy(frames_csv, edges_csv) -> HomotopySample:
    """Frames CSV: one row per vertex, one column per time sample."""
    table = read_columns(frames_csv)
    return HomotopySample(table.shape[0], np.array(read_edges(edges_csv)).reshape(-1, 2), table.T)


def build_product(h: HomotopySample, spatial: bool = True, temporal: bool = True) -> FilteredGraph:
    """Discretized M x I with values (f_t(P), t, -t); vertex (P, j) has index j * n + P.

    ``spatial``/``temporal`` switch off either edge family, for sensitivity checks.
    """
    n, frames = h.vertex_count, h.frame_count
    times = h.times
    values = np.column_stack([
        h.frames.reshape(-1),
        np.repeat(times, n),
        -np.repeat(times, n),
    ])
    blocks = []
    if spatial and len(h.edges):
        blocks += [h.edges + j * n for j in range(frames)]
    if temporal:
        idx = np.arange(n)
        blocks += [np.column_stack([idx + j * n, idx + (j + 1) * n]) for j in range(frames - 1)]
    edges = np.concatenate(blocks) if blocks else np.empty((0, 2), dtype=np.int64)
    return FilteredGraph(values, edges)


def relaxed_count(G: FilteredGraph, x, y) -> int:
    """Classes of the x-sublevel under y-sublevel connectedness, for x <= y.

    Unlike ``size_function_value`` this accepts points on the boundary of Delta+.
    """
    x = as_point(x, G.k)
    y = as_point(y, G.k)
    if not np.all(x <= y):
        raise ValueError("relaxed_count needs x <= y in every coordinate")
    return count_meeting(G, x, y)


@dataclass(frozen=True)
class ProbeResult:
    x: float
    y: float
    frame: int
    direct: int
    product: int

    @property
    def equal(self) -> bool:
        return self.direct == self.product


def probe_vineyard_link(
    h: HomotopySample,
    probes: Iterable[tuple[float, float, int]],
    product: FilteredGraph | None = None,
) -> list[ProbeResult]:
    """Evaluate both sides of the vineyard identity at each (x, y, frame) probe."""
    if product is None:
        product = build_product(h)
    times = h.times
    out = []
    for x, y, j in probes:
        if not 0 <= j < h.frame_count:
            raise ValueError(f"frame index {j} out of range 0..{h.frame_count - 1}")
        if not x <= y:
            raise ValueError(f"probe needs x <= y, got ({x}, {y})")
        t = times[j]
        direct = relaxed_count(h.frame_graph(j), [x], [y])
        lifted = relaxed_count(product, [x, t, -t], [y, t, -t])
        out.append(ProbeResult(float(x), float(y), int(j), direct, lifted))
    return out


def verify_vineyard_link(h: HomotopySample, probes, product: FilteredGraph | None = None) -> bool:
    return all(r.equal for r in probe_vineyard_link(h, probes, product))


def threshold_probes(h: HomotopySample) -> list[tuple[float, float, int]]:
    """Every pair x <= y of distinct frame values (plus one value below all), per frame."""
    probes = []
    for j in range(h.frame_count):
        levels = np.unique(h.frames[j])
        levels = np.concatenate([[levels[0] - 1.0], levels]).tolist()
        for a, x in enumerate(levels):
            for y in levels[a:]:
                probes.append((x, y, j))
    return probes
