import numpy as np
import pytest

from apspaf.config import SolverConfig
from apspaf.frontier import Triplet, extract_apbp, extract_apbsp, query
from apspaf.generate import GraphSpec, random_graph
from apspaf.graph import INF, Graph, maximal_flows
from apspaf.oracle import oracle_frontier, verify_frontier
from apspaf.unit import accelerate_maxmin, init_per_flow, solve_apsp_af_unit

from conftest import df_pairs, grid_graphs


def test_acceleration_three_vertex(tri):
    pairs, cap = accelerate_maxmin(tri, 2)
    # direct edge first (succ 3), then the wider two-hop route via 2
    assert pairs[(0, 2)] == [Triplet(1, 2.0, 2), Triplet(2, 3.0, 1)]
    assert pairs[(0, 1)] == [Triplet(1, 5.0, 1)]
    assert cap[0, 2] == 3.0


def test_acceleration_depth_one_stops(tri):
    pairs, _ = accelerate_maxmin(tri, 1)
    assert pairs[(0, 2)] == [Triplet(1, 2.0, 2)]


def test_init_per_flow_walk():
    pairs = {(0, 2): [Triplet(1, 2.0, 2), Triplet(2, 3.0, 1)]}
    per = init_per_flow(pairs, np.array([2.0, 3.0, 5.0]), 3)
    assert per.p[:, 0, 2].tolist() == [1, 2, INF]
    assert per.succ[:, 0, 2].tolist() == [2, 1, -1]
    assert per.p[:, 1, 1].tolist() == [0, 0, 0]


def test_solver_three_vertex(tri):
    fr = solve_apsp_af_unit(tri)
    assert [(e.d, e.f) for e in fr.get(0, 2)] == [(1, 2.0), (2, 3.0)]
    assert [(e.d, e.f) for e in fr.get(0, 1)] == [(1, 5.0)]
    assert [(e.d, e.f) for e in fr.get(1, 2)] == [(1, 3.0)]
    assert fr.get(2, 0) == ()
    assert fr == oracle_frontier(tri)


def test_extraction_three_vertex(tri):
    fr = solve_apsp_af_unit(tri)
    assert extract_apbp(fr)[0, 2] == 3.0
    bs = extract_apbsp(fr)
    assert (bs.d[0, 2], bs.f[0, 2]) == (1, 2.0)
    assert extract_apbp(fr)[2, 0] == 0 and bs.d[2, 0] == INF


def test_query_between_flows(tri):
    fr = solve_apsp_af_unit(tri)
    res = query(fr, 0, 2, 2.5)
    assert res.d == 2 and res.path == [0, 1, 2] and res.lookups == 2
    assert query(fr, 0, 2, 1.0).path == [0, 2]
    assert query(fr, 0, 2, 3.5) is None
    assert query(fr, 1, 1, 99.0).path == [1]


def test_no_edges():
    fr = solve_apsp_af_unit(Graph(4))
    assert fr.pairs == {}


def test_rejects_costs(tri_costs):
    with pytest.raises(ValueError):
        solve_apsp_af_unit(tri_costs)


@pytest.mark.parametrize("g", grid_graphs(12, (4, 16), seed=11), ids=lambda g: f"n{g.n}m{g.m}")
def test_matches_oracle_and_invariants(g):
    fr = solve_apsp_af_unit(g)
    assert verify_frontier(g, fr).ok
    assert df_pairs(fr) == df_pairs(oracle_frontier(g))
    t = len(maximal_flows(g))
    for entries in fr.pairs.values():
        assert 1 <= len(entries) <= min(g.n - 1, t)
        assert all(a.d < b.d and a.f < b.f for a, b in zip(entries, entries[1:]))


def test_frontier_flows_are_maximal():
    g = random_graph(GraphSpec(12, 0.4, t=7, seed=2))
    flows = set(maximal_flows(g).tolist())
    fr = solve_apsp_af_unit(g)
    assert all(e.f in flows for v in fr.pairs.values() for e in v)


def test_threads_do_not_change_result():
    g = random_graph(GraphSpec(18, 0.3, t=20, seed=5))
    one = solve_apsp_af_unit(g, SolverConfig(threads=1))
    many = solve_apsp_af_unit(g, SolverConfig(threads=4))
    assert one == many


def test_stats_recorded():
    g = random_graph(GraphSpec(16, 0.3, t=10, seed=1))
    fr = solve_apsp_af_unit(g, SolverConfig(r=3))
    assert fr.stats.r == 3 and fr.stats.l0 == 3
    assert len(fr.stats.cruise_iterations) == 10
