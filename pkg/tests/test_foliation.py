import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msize.errors import DimensionMismatch
from msize.foliation import (
    AdmissiblePair,
    HalfPlanePoint,
    pair_for_point,
    point_on_plane,
    reduce,
    sample_admissible,
)
from msize.shape import FilteredGraph

R2 = math.sqrt(2) / 2


def test_pair_for_diagonal_point():
    p, h = pair_for_point([0, 0], [1, 1])
    assert p.l == pytest.approx((R2, R2), abs=1e-12)
    assert p.b == pytest.approx((0, 0), abs=1e-12)
    assert (h.s, h.t) == pytest.approx((0, math.sqrt(2)), abs=1e-12)


def test_pair_for_skew_point():
    p, h = pair_for_point([1, 2], [3, 3])
    r5 = math.sqrt(5)
    assert p.l == pytest.approx((2 / r5, 1 / r5), abs=1e-12)
    assert p.b == pytest.approx((-1, 1), abs=1e-12)
    assert (h.s, h.t) == pytest.approx((r5, 2 * r5), abs=1e-12)
    x, y = point_on_plane(p, h)
    np.testing.assert_allclose(x, [1, 2], atol=1e-12)
    np.testing.assert_allclose(y, [3, 3], atol=1e-12)


def test_pair_for_scalar_point():
    p, h = pair_for_point([-0.5], [4.0])
    assert p.l == (1.0,) and p.b == (0.0,)
    assert (h.s, h.t) == pytest.approx((-0.5, 4.0))


def test_pair_for_point_rejects_boundary():
    with pytest.raises(ValueError):
        pair_for_point([0, 1], [1, 1])


def test_admissible_invariants():
    with pytest.raises(ValueError):
        AdmissiblePair((1.0, 0.0), (0.0, 0.0))
    with pytest.raises(ValueError):
        AdmissiblePair((0.6, 0.6), (0.0, 0.0))
    with pytest.raises(ValueError):
        AdmissiblePair((0.6, 0.8), (0.1, 0.0))
    with pytest.raises(DimensionMismatch):
        AdmissiblePair((1.0,), (0.0, 0.0))
    with pytest.raises(ValueError):
        HalfPlanePoint(1.0, 1.0)


def test_point_on_plane():
    x, y = point_on_plane(AdmissiblePair((R2, R2), (0, 0)), HalfPlanePoint(0, math.sqrt(2)))
    np.testing.assert_allclose(x, [0, 0], atol=1e-12)
    np.testing.assert_allclose(y, [1, 1], atol=1e-12)
    x, y = point_on_plane(AdmissiblePair((1.0,), (0.0,)), HalfPlanePoint(1, 2))
    assert x.tolist() == [1.0] and y.tolist() == [2.0]


def test_reduce_examples():
    g = FilteredGraph(np.array([[0.5, 0.2]]))
    assert reduce(g, AdmissiblePair((R2, R2), (0, 0)))[0] == pytest.approx(0.70711, abs=1e-5)

    rng = np.random.default_rng(3)
    vals = rng.normal(size=(6, 3))
    g = FilteredGraph(vals)
    u = 1 / math.sqrt(3)
    np.testing.assert_allclose(reduce(g, AdmissiblePair((u, u, u), (0, 0, 0))), math.sqrt(3) * vals.max(axis=1))

    g = FilteredGraph(vals[:, 0])
    np.testing.assert_array_equal(reduce(g, AdmissiblePair((1.0,), (0.0,))), vals[:, 0])

    with pytest.raises(DimensionMismatch):
        reduce(g, AdmissiblePair((R2, R2), (0, 0)))


def test_sample_admissible_single_pair():
    (p,) = sample_admissible(2, 1, 1, 0.0)
    assert p.l == pytest.approx((R2, R2), abs=1e-12)
    assert p.b == (0.0, 0.0)


def test_sample_admissible_scalar():
    assert sample_admissible(1, 5, 7, 3.0) == [AdmissiblePair((1.0,), (0.0,))]


def test_sample_admissible_theta_grid():
    pairs = sample_admissible(2, 3, 1)
    thetas = [math.atan2(p.l[1], p.l[0]) for p in pairs]
    assert thetas == pytest.approx([math.pi / 8, math.pi / 4, 3 * math.pi / 8], abs=1e-12)


def test_sample_admissible_offsets_k2():
    pairs = sample_admissible(2, 2, 3, 0.5)
    assert len(pairs) == 6
    assert [p.b for p in pairs[:3]] == [(-0.5, 0.5), (0.0, 0.0), (0.5, -0.5)]


@pytest.mark.parametrize("k,grid_l,grid_b", [(3, 2, 2), (3, 4, 3), (4, 3, 2)])
def test_sample_admissible_general_k(k, grid_l, grid_b):
    pairs = sample_admissible(k, grid_l, grid_b, 1.5)
    n_dirs = math.comb(grid_l + k - 2, k - 1)
    assert len(pairs) == n_dirs * grid_b ** (k - 1)
    assert len(set(pairs)) == len(pairs)
    for p in pairs:
        assert min(p.l) > 0
        assert math.hypot(*p.l) == pytest.approx(1, abs=1e-9)
        assert abs(sum(p.b)) <= 1e-9


def test_sample_admissible_errors():
    with pytest.raises(ValueError):
        sample_admissible(0)
    with pytest.raises(ValueError):
        sample_admissible(2, 0, 1)
    with pytest.raises(ValueError):
        sample_admissible(2, 1, 1, -1.0)


@st.composite
def delta_plus_points(draw):
    k = draw(st.integers(1, 5))
    x = draw(st.lists(st.floats(-100, 100), min_size=k, max_size=k))
    gap = draw(st.lists(st.floats(1e-3, 50), min_size=k, max_size=k))
    return np.array(x), np.array(x) + np.array(gap)


@settings(max_examples=300)
@given(delta_plus_points())
def test_round_trip(xy):
    x, y = xy
    p, h = pair_for_point(x, y)
    assert h.s < h.t
    x2, y2 = point_on_plane(p, h)
    np.testing.assert_allclose(x2, x, rtol=0, atol=1e-9)
    np.testing.assert_allclose(y2, y, rtol=0, atol=1e-9)


def test_sublevel_identity():
    rng = np.random.default_rng(11)
    for _ in range(500):
        k = int(rng.integers(1, 5))
        l = rng.uniform(0.05, 1, size=k)
        p = AdmissiblePair(tuple(l / np.linalg.norm(l)), tuple(np.append(b := rng.uniform(-2, 2, k - 1), -b.sum())))
        g = FilteredGraph(rng.uniform(-5, 5, size=(int(rng.integers(1, 9)), k)))
        s = rng.uniform(-10, 10)
        x = s * np.asarray(p.l) + np.asarray(p.b)
        direct = np.all(g.values <= x, axis=1)
        # exact ties, where rounding could split the two tests, have probability ~0
        assert np.array_equal(direct, reduce(g, p) <= s)
