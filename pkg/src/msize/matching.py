"""Matching distance between 1-dimensional size functions.

Cost rules (max-norm, diagonal projection at half persistence):

* cornerpoint (x, y) to cornerpoint (x', y'):
  min(max(|x - x'|, |y - y'|), max((y - x) / 2, (y' - x') / 2))
* cornerpoint to the diagonal: (y - x) / 2
* cornerline x to cornerline x': |x - x'|; never to a cornerpoint.

Series with different numbers of cornerlines are at distance +inf.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from msize.sizefn1d import CornerSeries

ZERO_TOL = 1e-12


@dataclass(frozen=True)
class Assignment:
    """One matched item. ``left``/``right`` index into the series; None is the diagonal."""

    kind: str  # "point" or "line"
    left: int | None
    right: int | None
    cost: float

    def to_json(self) -> dict:
        return {"kind": self.kind, "left": self.left, "right": self.right, "cost": self.cost}


@dataclass(frozen=True)
class MatchingResult:
    cost: float
    pairs: list[Assignment] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"cost": self.cost, "pairs": [p.to_json() for p in self.pairs]}


def _half_persistence(points: np.ndarray) -> np.ndarray:
    return (points[:, 1] - points[:, 0]) / 2


def point_costs(a: CornerSeries, b: CornerSeries) -> np.ndarray:
    """(len(a), len(b)) matrix of cornerpoint-to-cornerpoint costs."""
    pa = np.asarray(a.cornerpoints, dtype=float).reshape(-1, 2)
    pb = np.asarray(b.cornerpoints, dtype=float).reshape(-1, 2)
    linf = np.max(np.abs(pa[:, None, :] - pb[None, :, :]), axis=2)
    both_diag = np.maximum(_half_persistence(pa)[:, None], _half_persistence(pb)[None, :])
    return np.minimum(linf, both_diag)


def _perfect_matching(n: int, m: int, pair: np.ndarray, ha: np.ndarray, hb: np.ndarray, c: float):
    """Perfect matching of the augmented bipartite graph using only edges of cost <= c.

    Rows: a-points 0..n-1, then diagonal slots for b-points.
    Columns: b-points 0..m-1, then diagonal slots for a-points.
    Returns the row -> column array, or None if no perfect matching exists.
    """
    size = n + m
    dense = np.zeros((size, size), dtype=bool)
    dense[:n, :m] = pair <= c
    dense[np.arange(n), m + np.arange(n)] = ha <= c
    dense[n + np.arange(m), np.arange(m)] = hb <= c
    dense[n:, m:] = True
    match = maximum_bipartite_matching(csr_matrix(dense), perm_type="column")
    if np.any(match < 0):
        return None
    return match


def _match_points(a: CornerSeries, b: CornerSeries) -> tuple[float, list[Assignment]]:
    n, m = len(a.cornerpoints), len(b.cornerpoints)
    if n == 0 and m == 0:
        return 0.0, []
    pa = np.asarray(a.cornerpoints, dtype=float).reshape(-1, 2)
    pb = np.asarray(b.cornerpoints, dtype=float).reshape(-1, 2)
    pair = point_costs(a, b)
    ha, hb = _half_persistence(pa), _half_persistence(pb)

    # The optimum is one of the finitely many edge costs.
    candidates = np.unique(np.concatenate([[0.0], pair.ravel(), ha, hb]))
    lo, hi = 0, len(candidates) - 1
    best = _perfect_matching(n, m, pair, ha, hb, candidates[hi])
    while lo < hi:
        mid = (lo + hi) // 2
        match = _perfect_matching(n, m, pair, ha, hb, candidates[mid])
        if match is None:
            lo = mid + 1
        else:
            hi, best = mid, match

    pairs = []
    for row, col in enumerate(best.tolist()):
        if row < n and col < m:
            pairs.append(Assignment("point", row, col, float(pair[row, col])))
        elif row < n:
            pairs.append(Assignment("point", row, None, float(ha[row])))
        elif col < m:
            pairs.append(Assignment("point", None, col, float(hb[col])))
    cost = max((p.cost for p in pairs), default=0.0)
    return cost, pairs


def _match_lines(a: CornerSeries, b: CornerSeries) -> tuple[float, list[Assignment]]:
    # On the real line, pairing sorted values in order minimizes the largest gap.
    pairs = [
        Assignment("line", i, i, abs(x - y))
        for i, (x, y) in enumerate(zip(a.cornerlines, b.cornerlines))
    ]
    if len(a.cornerlines) != len(b.cornerlines):
        return math.inf, pairs
    return max((p.cost for p in pairs), default=0.0), pairs


def d_match(a: CornerSeries, b: CornerSeries) -> MatchingResult:
    """Bottleneck-optimal matching between two corner series."""
    point_cost, point_pairs = _match_points(a, b)
    line_cost, line_pairs = _match_lines(a, b)
    return MatchingResult(max(point_cost, line_cost), point_pairs + line_pairs)


def verify_coincidence(a_family, b_family) -> bool:
    """True iff the two families agree (d_match == 0) at every shared index.

    Families are either mappings keyed by admissible pair or equal-length sequences.
    """
    if isinstance(a_family, Mapping) and isinstance(b_family, Mapping):
        if set(a_family) != set(b_family):
            raise ValueError("families are indexed by different admissible pairs")
        keys = list(a_family)
        items = [(a_family[key], b_family[key]) for key in keys]
    elif isinstance(a_family, Sequence) and isinstance(b_family, Sequence):
        if len(a_family) != len(b_family):
            raise ValueError(f"family sizes differ: {len(a_family)} vs {len(b_family)}")
        items = list(zip(a_family, b_family))
    else:
        raise TypeError("families must both be mappings or both be sequences")
    return all(d_match(x, y).cost <= ZERO_TOL for x, y in items)
