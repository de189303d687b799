"""1-dimensional size functions as formal series of cornerpoints and cornerlines."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from msize.shape import FilteredGraph, UnionFind


@dataclass(frozen=True)
class CornerSeries:
    """Multisets of cornerpoints (birth, death) and cornerlines (birth).

    Both are stored sorted with multiplicity expanded, so two series describing
    the same size function compare equal.
    """

    cornerpoints: tuple[tuple[float, float], ...] = ()
    cornerlines: tuple[float, ...] = ()

    def __post_init__(self):
        points = tuple(sorted((float(b), float(d)) for b, d in self.cornerpoints))
        for b, d in points:
            if not b < d:
                raise ValueError(f"cornerpoint needs birth < death, got ({b}, {d})")
        object.__setattr__(self, "cornerpoints", points)
        object.__setattr__(self, "cornerlines", tuple(sorted(float(x) for x in self.cornerlines)))

    def to_json(self) -> dict:
        return {
            "cornerpoints": [[b, d] for b, d in self.cornerpoints],
            "cornerlines": list(self.cornerlines),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CornerSeries":
        return cls(
            tuple((b, d) for b, d in data.get("cornerpoints", [])),
            tuple(data.get("cornerlines", [])),
        )


def compute_corner_series(G: FilteredGraph, f) -> CornerSeries:
    """Elder-rule 0-dimensional persistence of the sublevel filtration of f on G.

    Vertices enter in (f, index) order and each edge at the larger of its
    endpoint values. On a merge the younger class -- later (birth, root index)
    -- dies at the merge value; classes that never die become cornerlines.
    """
    f = np.asarray(f, dtype=float).reshape(-1)
    if f.shape[0] != G.vertex_count:
        raise ValueError(f"need one value per vertex ({G.vertex_count}), got {f.shape[0]}")
    if not np.all(np.isfinite(f)):
        raise ValueError("function values must be finite")

    order = np.lexsort((np.arange(len(f)), f))
    rank = np.empty(len(f), dtype=np.int64)
    rank[order] = np.arange(len(f))
    adj = G.adjacency
    fl = f.tolist()

    uf = UnionFind(len(f))
    # elder[root] = vertex whose (f, index) key is smallest in that class
    elder = list(range(len(f)))
    points = []
    for v in order.tolist():
        rv = rank[v]
        level = fl[v]
        for u in adj[v]:
            if rank[u] > rv:
                continue
            a, b = uf.find(u), uf.find(v)
            if a == b:
                continue
            ea, eb = elder[a], elder[b]
            young, old = (ea, eb) if rank[ea] > rank[eb] else (eb, ea)
            if fl[young] < level:
                points.append((fl[young], level))
            elder[uf.union(a, b)] = old

    lines = [fl[elder[r]] for r in range(len(f)) if uf.find(r) == r]
    return CornerSeries(tuple(points), tuple(lines))


def evaluate(cs: CornerSeries, s: float, t: float) -> int:
    """Value of the size function described by cs at (s, t), s < t."""
    if not s < t:
        raise ValueError(f"evaluate needs s < t, got s={s}, t={t}")
    count = sum(1 for b, d in cs.cornerpoints if b <= s and d > t)
    return count + bisect.bisect_right(cs.cornerlines, s)
