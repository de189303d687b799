"""Discrete size pairs: graphs whose vertices carry k-dimensional values.

A compact space M with a measuring function phi: M -> R^k is replaced by a
finite graph (typically a mesh 1-skeleton) with a vector of k values per
vertex. A vertex belongs to the sublevel set at y when every coordinate of its
value is <= the matching coordinate of y; an edge belongs to it when both
endpoints do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from msize.errors import DimensionMismatch


def as_point(x, k: int | None = None) -> np.ndarray:
    """Coerce a scalar or sequence into a 1-D float vector, checking its length."""
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if arr.ndim != 1:
        raise ValueError(f"expected a vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    if k is not None and arr.shape[0] != k:
        raise DimensionMismatch(f"expected dimension {k}, got {arr.shape[0]}")
    return arr


def leq(x, y) -> bool:
    """True iff x_i <= y_i for every coordinate."""
    x = as_point(x)
    y = as_point(y, len(x))
    return bool(np.all(x <= y))


def lt(x, y) -> bool:
    """True iff x_i < y_i for every coordinate, i.e. (x, y) lies in Delta+."""
    x = as_point(x)
    y = as_point(y, len(x))
    return bool(np.all(x < y))


class UnionFind:
    """Disjoint sets over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> int:
        """Merge the sets of x and y; return the surviving root."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return rx


@dataclass(frozen=True, eq=False)
class FilteredGraph:
    """Finite graph with a k-dimensional measuring value on each vertex.

    ``values`` has shape (vertex_count, k); a 1-D array is read as k = 1.
    ``edges`` is an (m, 2) integer array of distinct, unordered vertex pairs.
    Both arrays are copied and frozen on construction.
    """

    values: np.ndarray
    edges: np.ndarray = field(default_factory=lambda: np.empty((0, 2), dtype=np.int64))

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
            raise ValueError(f"values must have shape (n>=1, k>=1), got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("measuring values must be finite")

        edges = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        n = values.shape[0]
        if edges.size:
            if edges.min() < 0 or edges.max() >= n:
                raise ValueError("edge references a vertex index out of range")
            if np.any(edges[:, 0] == edges[:, 1]):
                raise ValueError("self-loops are not allowed")
            edges = np.sort(edges, axis=1)
            if len(np.unique(edges, axis=0)) != len(edges):
                raise ValueError("duplicate edges")

        values.setflags(write=False)
        edges.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, values, edges: Iterable[Sequence[int]]) -> "FilteredGraph":
        """Build a graph, silently dropping duplicate edges (in either orientation)."""
        seen = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls(values, np.array(seen, dtype=np.int64).reshape(-1, 2))

    @property
    def vertex_count(self) -> int:
        return self.values.shape[0]

    @property
    def k(self) -> int:
        return self.values.shape[1]

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges.tolist():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def with_values(self, values) -> "FilteredGraph":
        """Same topology, different measuring function."""
        return FilteredGraph(values, self.edges)

    def sublevel_mask(self, y) -> np.ndarray:
        """Boolean mask of vertices P with values(P) <= y coordinate-wise."""
        y = as_point(y, self.k)
        return np.all(self.values <= y, axis=1)


@dataclass(frozen=True)
class ComponentLabeling:
    """Component ids for a sublevel subgraph; -1 marks vertices outside it.

    Labels are numbered 0..class_count-1 in order of each component's
    smallest vertex index, so equal inputs give equal labelings.
    """

    labels: np.ndarray
    class_count: int

    def classes(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.class_count)]
        for v, lab in enumerate(self.labels.tolist()):
            if lab >= 0:
                out[lab].add(v)
        return [frozenset(c) for c in out]


def _label_mask(G: FilteredGraph, mask: np.ndarray) -> ComponentLabeling:
    uf = UnionFind(G.vertex_count)
    if len(G.edges):
        keep = mask[G.edges[:, 0]] & mask[G.edges[:, 1]]
        for u, v in G.edges[keep].tolist():
            uf.union(u, v)
    labels = np.full(G.vertex_count, -1, dtype=np.int64)
    root_label: dict[int, int] = {}
    for v in np.flatnonzero(mask).tolist():
        r = uf.find(v)
        if r not in root_label:
            root_label[r] = len(root_label)
        labels[v] = root_label[r]
    return ComponentLabeling(labels, len(root_label))


def sublevel_components(G: FilteredGraph, y) -> ComponentLabeling:
    """Connected components of the subgraph induced by {P : values(P) <= y}."""
    return _label_mask(G, G.sublevel_mask(y))


def count_meeting(G: FilteredGraph, x, y) -> int:
    """Number of components of the y-sublevel containing a vertex of the x-sublevel.

    No ordering between x and y is required; callers enforce their own domain.
    """
    x_mask = G.sublevel_mask(x)
    labeling = sublevel_components(G, y)
    hit = labeling.labels[x_mask]
    return int(len(np.unique(hit[hit >= 0])))


def size_function_value(G: FilteredGraph, x, y) -> int:
    """The k-dimensional size function of G at (x, y), defined for x < y."""
    x = as_point(x, G.k)
    y = as_point(y, G.k)
    if not np.all(x < y):
        raise ValueError("size function is defined only on Delta+ (x < y in every coordinate)")
    return count_meeting(G, x, y)


def component_count(G: FilteredGraph) -> int:
    return _label_mask(G, np.ones(G.vertex_count, dtype=bool)).class_count
