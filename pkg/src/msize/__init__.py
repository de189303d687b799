"""Multidimensional size functions on discretized shapes.

Sublevel-set connectivity on filtered graphs, reduction of k-dimensional size
functions to 1-dimensional ones along a half-plane foliation, matching
distances and the resulting lower bound for the natural pseudo-distance.
"""

from msize.errors import DimensionMismatch, InvariantViolation
from msize.shape import (
    ComponentLabeling,
    FilteredGraph,
    UnionFind,
    component_count,
    leq,
    lt,
    size_function_value,
    sublevel_components,
)
from msize.foliation import (
    AdmissiblePair,
    HalfPlanePoint,
    pair_for_point,
    point_on_plane,
    reduce,
    sample_admissible,
)
from msize.sizefn1d import CornerSeries, compute_corner_series, evaluate
from msize.matching import Assignment, MatchingResult, d_match, verify_coincidence
from msize.multidist import (
    MultiDistEntry,
    MultiDistReport,
    compute_D_match,
    pseudo_distance_gap_report,
)
from msize.vineyard import (
    HomotopySample,
    build_product,
    relaxed_count,
    verify_vineyard_link,
)

__version__ = "0.1.0"
