"""Half-plane foliation of Delta+ and the scalar reduction along each leaf.

Every admissible pair (l, b) -- l a unit vector with positive entries, b a
zero-sum offset -- spans the half-plane {(s*l + b, t*l + b) : s < t}. Each
point of Delta+ lies on exactly one such half-plane, and on it the
k-dimensional size function equals the 1-dimensional size function of
F(P) = max_i (phi_i(P) - b_i) / l_i.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from msize.errors import DimensionMismatch
from msize.shape import FilteredGraph, as_point

TOL = 1e-9


@dataclass(frozen=True)
class AdmissiblePair:
    l: tuple[float, ...]
    b: tuple[float, ...]

    def __post_init__(self):
        l = tuple(float(v) for v in np.atleast_1d(self.l))
        b = tuple(float(v) for v in np.atleast_1d(self.b))
        if len(l) != len(b) or not l:
            raise DimensionMismatch(f"l has dimension {len(l)}, b has {len(b)}")
        if not all(math.isfinite(v) for v in l + b):
            raise ValueError("admissible pair entries must be finite")
        if min(l) <= 0:
            raise ValueError(f"l must be strictly positive, got {l}")
        if abs(math.hypot(*l) - 1.0) > TOL:
            raise ValueError(f"l must be a unit vector, |l| = {math.hypot(*l)}")
        if abs(math.fsum(b)) > TOL:
            raise ValueError(f"b must sum to zero, sum = {math.fsum(b)}")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "b", b)

    @property
    def k(self) -> int:
        return len(self.l)

    @property
    def weight(self) -> float:
        """min_i l_i, the factor that turns d_match into a pseudo-distance bound."""
        return min(self.l)

    def to_dict(self) -> dict:
        return {"l": list(self.l), "b": list(self.b)}


@dataclass(frozen=True)
class HalfPlanePoint:
    s: float
    t: float

    def __post_init__(self):
        if not self.s < self.t:
            raise ValueError(f"half-plane coordinates need s < t, got s={self.s}, t={self.t}")


def pair_for_point(x, y) -> tuple[AdmissiblePair, HalfPlanePoint]:
    """The unique admissible pair whose half-plane contains (x, y), and (s, t) on it."""
    x = as_point(x)
    y = as_point(y, len(x))
    if not np.all(x < y):
        raise ValueError("(x, y) must lie in Delta+ (x < y in every coordinate)")
    d = y - x
    l = d / math.sqrt(math.fsum(d * d))
    sum_l = math.fsum(l)
    s = math.fsum(x) / sum_l
    t = math.fsum(y) / sum_l
    # Algebraically b_i = (x_i * sum(y) - y_i * sum(x)) / sum(y - x); the form
    # x - s*l avoids cancellation between the two large products.
    b = x - s * l
    b[np.argmax(np.abs(b))] -= math.fsum(b)
    return AdmissiblePair(tuple(l), tuple(b)), HalfPlanePoint(s, t)


def point_on_plane(p: AdmissiblePair, h: HalfPlanePoint) -> tuple[np.ndarray, np.ndarray]:
    l = np.asarray(p.l)
    b = np.asarray(p.b)
    return h.s * l + b, h.t * l + b


def reduce(G: FilteredGraph, p: AdmissiblePair) -> np.ndarray:
    """Per-vertex scalar F(P) = max_i (phi_i(P) - b_i) / l_i."""
    if p.k != G.k:
        raise DimensionMismatch(f"pair has dimension {p.k}, graph has {G.k}")
    return np.max((G.values - np.asarray(p.b)) / np.asarray(p.l), axis=1)


def _interior_simplex(k: int, n: int) -> list[np.ndarray]:
    # compositions of n + k - 1 into k positive parts; for k = 2 that is n points
    total = n + k - 1
    out = []
    for cuts in itertools.combinations(range(1, total), k - 1):
        parts = np.diff((0,) + cuts + (total,))
        out.append(parts / total)
    return out


def _axis_grid(n: int, radius: float) -> np.ndarray:
    if n == 1:
        return np.zeros(1)
    return np.linspace(-radius, radius, n)


def sample_admissible(k: int, grid_l: int = 1, grid_b: int = 1, b_radius: float = 0.0) -> list[AdmissiblePair]:
    """A finite grid of admissible pairs, ordered l-major then b.

    For k = 2, l = (cos theta, sin theta) with theta on grid_l interior points of
    (0, pi/2), and b = (a, -a) with a on grid_b points of [-b_radius, b_radius].
    For larger k, l is an interior grid of the positive simplex normalized to the
    unit sphere, and b = sum_j a_j (e_j - e_{j+1}) with each a_j on the same
    axis grid (grid_b ** (k - 1) offsets).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if grid_l < 1 or grid_b < 1:
        raise ValueError("grid sizes must be >= 1")
    if b_radius < 0:
        raise ValueError("b_radius must be >= 0")
    if k == 1:
        return [AdmissiblePair((1.0,), (0.0,))]

    if k == 2:
        thetas = (np.arange(1, grid_l + 1) * (math.pi / 2) / (grid_l + 1)).tolist()
        directions = [np.array([math.cos(th), math.sin(th)]) for th in thetas]
    else:
        directions = [w / np.linalg.norm(w) for w in _interior_simplex(k, grid_l)]

    axis = _axis_grid(grid_b, b_radius)
    offsets = []
    for coeffs in itertools.product(axis, repeat=k - 1):
        b = np.zeros(k)
        for j, a in enumerate(coeffs):
            b[j] += a
            b[j + 1] -= a
        offsets.append(b)

    return [AdmissiblePair(tuple(l), tuple(b)) for l in directions for b in offsets]
