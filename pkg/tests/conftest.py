import numpy as np
import pytest
from hypothesis import strategies as st

from msize.shape import FilteredGraph
from msize.sizefn1d import CornerSeries


@pytest.fixture
def path_graph():
    """A - B - C with scalar values (0, 2, 1)."""
    return FilteredGraph(np.array([0.0, 2.0, 1.0]), [(0, 1), (1, 2)])


@st.composite
def graphs(draw, max_vertices=12, k=None, tie_values=True):
    n = draw(st.integers(1, max_vertices))
    dim = draw(st.integers(1, 3)) if k is None else k
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if tie_values:
        elem = st.integers(-5, 5).map(float)
    else:
        elem = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
    values = draw(st.lists(st.lists(elem, min_size=dim, max_size=dim), min_size=n, max_size=n))
    return FilteredGraph(np.array(values), edges)


@st.composite
def corner_series(draw, max_points=5, lines=None):
    coord = st.integers(-20, 20).map(lambda v: v / 4)
    raw = draw(st.lists(st.tuples(coord, coord), max_size=max_points))
    points = [(min(a, b), max(a, b)) for a, b in raw if a != b]
    n_lines = draw(st.integers(0, 2)) if lines is None else lines
    cl = draw(st.lists(coord, min_size=n_lines, max_size=n_lines))
    return CornerSeries(tuple(points), tuple(cl))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
