import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apspaf.agm import (
    agm_apsd,
    cruise,
    next_bound,
    plan_phases,
    select_bridging_set,
    window_low,
)
from apspaf.generate import GraphSpec, random_graph
from apspaf.graph import INF, Graph
from apspaf.oracle import per_flow_apsp


def bfs_matrix(g):
    ref = per_flow_apsp(g, 0.0)
    return np.array([[INF if v == math.inf else v for v in row] for row in ref], dtype=np.int64)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1, 1, 1.0) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n, 1, 1.0) for i in range(n)])


def truncated(dist, bound):
    out = dist.copy()
    out[out > bound] = INF
    return out


def test_plan_phases_examples():
    assert plan_phases(16, 1, omega=3.0).r == 1
    assert plan_phases(81, 9, omega=3.0).r == 3


def test_plan_phases_clamps_and_overrides():
    assert plan_phases(10, 10**6, omega=2.0).r == 9
    assert plan_phases(10, 10**6, c=3, omega=2.0).r == 29
    assert plan_phases(10, 0).r == 1
    assert plan_phases(10, 5, r_override=7).r == 7
    with pytest.raises(ValueError):
        plan_phases(10, 5, r_override=10)
    with pytest.raises(ValueError):
        plan_phases(10, 5, omega=3.5)
    with pytest.raises(ValueError):
        plan_phases(10, 5, growth=2.0)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 500), st.integers(1, 400), st.integers(1, 5), st.floats(2.0, 3.0))
def test_plan_phases_monotone_in_t(n, t, c, omega):
    a = plan_phases(n, t, c, omega).r
    b = plan_phases(n, t + 1, c, omega).r
    assert 1 <= a <= b <= max(1, c * n - 1)


def test_bounds_and_windows():
    assert next_bound(1, 1.5) == 2
    assert next_bound(4, 1.5) == 6
    assert next_bound(3, 1.9) == 6
    assert window_low(4, 6) == 2
    # faster growth pushes the window up so suffixes stay solved
    assert window_low(3, 6) == 3


def test_bridging_set_smallest_class():
    d = np.array([[0, 1, 1, 2]])
    assert select_bridging_set(d, 2, 0).tolist() == [3]


def test_bridging_set_single_value():
    d = np.array([[0, 2, 2]])
    assert select_bridging_set(d, 2, 0).tolist() == [1, 2]


def test_bridging_set_ties_go_up():
    d = np.array([[0, 2, 3, 9]])
    assert select_bridging_set(d, 4, 0).tolist() == [2]


def test_bridging_set_gaps():
    d = np.array([[0, 1, 2, 2, 4]])
    assert select_bridging_set(d, 4, 0, low=2).tolist() == [4]
    assert select_bridging_set(d, 4, 0, low=2, gaps=True).size == 0
    assert select_bridging_set(np.array([[0, 5]]), 2, 0).size == 0


def test_cruise_on_path_graph():
    g = path_graph(8)
    d = truncated(bfs_matrix(g), 2)
    res = cruise(d, 2)
    assert res.d[0, 7] == 7
    assert np.array_equal(res.d, bfs_matrix(g))


def test_cruise_fixpoint_on_exact_input():
    g = random_graph(GraphSpec(12, 0.3, seed=4))
    exact = bfs_matrix(g)
    assert np.array_equal(cruise(exact, 1).d, exact)


def test_cruise_does_not_modify_input():
    d = truncated(bfs_matrix(path_graph(6)), 1)
    before = d.copy()
    cruise(d, 1)
    assert np.array_equal(d, before)


def test_cruise_successors_follow_paths():
    g = path_graph(6)
    d = truncated(bfs_matrix(g), 1)
    succ = np.where(d == 1, np.arange(6)[None, :], -1)
    res = cruise(d, 1, successors=succ)
    assert res.successors[0].tolist()[1:] == [1, 1, 1, 1, 1]


def test_agm_cycle():
    n = 5
    d = agm_apsd(cycle_graph(n))
    assert d.tolist() == [[(j - i) % n for j in range(n)] for i in range(n)]


def test_agm_rejects_costs():
    with pytest.raises(ValueError):
        agm_apsd(Graph.from_edges(2, [(0, 1, 2, 1.0)]))


@pytest.mark.parametrize("seed", range(6))
def test_agm_every_depth(seed):
    g = random_graph(GraphSpec(14, 0.15, seed=seed))
    ref = bfs_matrix(g)
    for r in range(1, g.n):
        assert np.array_equal(agm_apsd(g, r=r), ref), r


@pytest.mark.parametrize("growth", [1.1, 1.5, 1.7, 1.99])
def test_agm_growth_values(growth):
    for seed in range(5):
        g = random_graph(GraphSpec(20, 0.08, seed=seed))
        assert np.array_equal(agm_apsd(g, r=2, growth=growth), bfs_matrix(g))


def test_agm_trace_records_iterations():
    trace = []
    agm_apsd(path_graph(20), r=2, trace=trace)
    bounds = [it.bound for it in trace]
    assert bounds[0] == 2 and bounds == sorted(bounds)
    assert trace[-1].next_bound >= 20
