import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msize.errors import DimensionMismatch
from msize.shape import (
    FilteredGraph,
    UnionFind,
    component_count,
    leq,
    lt,
    size_function_value,
    sublevel_components,
)

from conftest import graphs
from oracles import brute_size_function, flood_fill


def test_order_relations():
    assert leq((1, 2), (1, 3))
    assert not lt((1, 2), (1, 3))
    assert lt((0, 0), (1, 1))
    assert not leq((2, 0), (1, 3))
    assert not leq((1, 3), (2, 0))


def test_order_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        leq((1, 2), (1, 2, 3))
    with pytest.raises(DimensionMismatch):
        lt((1,), (1, 2))


def test_graph_validation():
    with pytest.raises(ValueError):
        FilteredGraph(np.zeros(3), [(0, 3)])
    with pytest.raises(ValueError):
        FilteredGraph(np.zeros(3), [(1, 1)])
    with pytest.raises(ValueError):
        FilteredGraph(np.zeros(3), [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        FilteredGraph(np.array([0.0, np.inf]))
    with pytest.raises(ValueError):
        FilteredGraph(np.zeros((0, 2)))
    g = FilteredGraph.from_edges(np.zeros(3), [(0, 1), (1, 0), (2, 1)])
    assert g.edges.tolist() == [[0, 1], [1, 2]]


def test_graph_is_read_only():
    g = FilteredGraph(np.zeros((2, 2)), [(0, 1)])
    with pytest.raises(ValueError):
        g.values[0, 0] = 1.0


def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    uf.union(1, 2)
    assert uf.find(0) == uf.find(2)
    assert uf.find(3) == uf.find(4)
    assert uf.find(0) != uf.find(3)
    assert uf.size[uf.find(0)] == 3


def test_sublevel_components_path(path_graph):
    lab = sublevel_components(path_graph, [1.5])
    assert lab.class_count == 2
    assert set(lab.classes()) == {frozenset({0}), frozenset({2})}
    assert lab.labels[1] == -1

    lab = sublevel_components(path_graph, [2.5])
    assert lab.class_count == 1
    assert lab.classes() == [frozenset({0, 1, 2})]

    lab = sublevel_components(path_graph, [-1.0])
    assert lab.class_count == 0
    assert np.all(lab.labels == -1)


def test_size_function_path(path_graph):
    assert size_function_value(path_graph, [1], [1.5]) == 2
    assert size_function_value(path_graph, [0.5], [1.5]) == 1
    assert size_function_value(path_graph, [1], [2.5]) == 1


def test_size_function_outside_delta_plus(path_graph):
    with pytest.raises(ValueError):
        size_function_value(path_graph, [1], [1])
    g = FilteredGraph(np.zeros((2, 2)), [(0, 1)])
    with pytest.raises(ValueError):
        size_function_value(g, [0, 1], [1, 1])
    with pytest.raises(DimensionMismatch):
        size_function_value(g, [0], [1])


def test_component_count():
    assert component_count(FilteredGraph(np.zeros(4), [(0, 1), (1, 2), (2, 3)])) == 1
    assert component_count(FilteredGraph(np.zeros(2))) == 2
    assert component_count(FilteredGraph(np.zeros(7))) == 7


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_sublevel_matches_flood_fill(g, data):
    y = np.array(data.draw(st.lists(st.integers(-6, 6).map(float), min_size=g.k, max_size=g.k)))
    mask = np.all(g.values <= y, axis=1)
    expected = set(flood_fill(g.vertex_count, g.edges.tolist(), mask.tolist()))
    assert set(sublevel_components(g, y).classes()) == expected


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_size_function_matches_oracle_and_is_monotone(g, data):
    coord = st.integers(-6, 6).map(float)
    x = np.array(data.draw(st.lists(coord, min_size=g.k, max_size=g.k)))
    gap = np.array(data.draw(st.lists(st.integers(1, 4).map(float), min_size=g.k, max_size=g.k)))
    y = x + gap
    value = size_function_value(g, x, y)
    assert value == brute_size_function(g.values, g.edges.tolist(), x, y)
    # larger y can only merge classes, smaller x can only drop them
    assert size_function_value(g, x, y + 1) <= value
    assert size_function_value(g, x - 1, y) <= value
    assert value <= sublevel_components(g, x).class_count
    assert value <= sublevel_components(g, y).class_count


@settings(max_examples=100, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_labeling_independent_of_vertex_order(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    inv = np.argsort(perm)
    # vertex i of the permuted graph is vertex perm[i] of the original
    h = FilteredGraph(g.values[perm], [(inv[u], inv[v]) for u, v in g.edges.tolist()])
    y = np.zeros(g.k)
    orig = {frozenset(c) for c in sublevel_components(g, y).classes()}
    moved = {frozenset(perm[v] for v in c) for c in sublevel_components(h, y).classes()}
    assert orig == moved
    assert sublevel_components(g, y).labels.tolist() == sublevel_components(g, y).labels.tolist()
