"""APSP for all flows on digraphs with positive integer costs up to ``c``.

Each real vertex grows a chain of ``c - 1`` artificial vertices joined by
unit-cost, infinite-capacity edges. An edge of cost ``w`` leaves the chain of
its tail at position ``w - 1`` (position 0 is the vertex itself), so path
lengths in the expanded graph equal path costs in the original one. The
(max,min) acceleration runs on the expanded graph while counting real hops;
everything after it works on the original vertices again, with the hop
counts choosing the bridging sets.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .agm import DEFAULT_GROWTH, CruiseResult, cruise, plan_phases
from .config import SolverConfig, SolveStats
from .frontier import FlowFrontier
from .graph import CAP_INF, INF, Graph, GraphError, distance_matrix, maximal_flows
from .semiring import NO_WITNESS
from .unit import PerFlow, finalize, init_per_flow, maxmin_acceleration, run_cruises


@dataclass(frozen=True)
class ExpandedGraph:
    base: Graph
    c: int
    owner: np.ndarray  # expanded id -> real vertex whose chain it sits on
    position: np.ndarray  # chain position, 0 for real vertices
    edges: tuple[tuple[int, int, float], ...]  # (src, dst, cap), all unit cost

    @property
    def size(self) -> int:
        return len(self.owner)

    @property
    def real(self) -> np.ndarray:
        return self.position == 0

    def vertex(self, v: int, pos: int) -> int:
        """Expanded id of chain position ``pos`` of real vertex ``v``."""
        if pos == 0:
            return v
        return self.base.n + v * (self.c - 1) + pos - 1

    def capacity_matrix(self) -> np.ndarray:
        cap = np.zeros((self.size, self.size), dtype=np.float64)
        np.fill_diagonal(cap, CAP_INF)
        for a, b, f in self.edges:
            cap[a, b] = f
        return cap


def expand(g: Graph, c: int | None = None) -> ExpandedGraph:
    """Unit-cost expansion with ``c * n`` vertices; real ids are kept as is."""
    c = g.max_cost if c is None else c
    if c < 1:
        raise GraphError(f"cost bound must be >= 1, got {c}")
    n = g.n
    owner = np.concatenate([np.arange(n), np.repeat(np.arange(n), c - 1)])
    position = np.concatenate([np.zeros(n, dtype=np.int64), np.tile(np.arange(1, c), n)])
    eg = ExpandedGraph(g, c, owner, position, ())
    edges = []
    for v in range(n):
        for pos in range(1, c):
            edges.append((eg.vertex(v, pos - 1), eg.vertex(v, pos), CAP_INF))
    for e in g.edges:
        if not 1 <= e.cost <= c:
            raise GraphError(f"edge ({e.src + 1},{e.dst + 1}) cost {e.cost} outside 1..{c}")
        edges.append((eg.vertex(e.src, e.cost - 1), e.dst, e.cap))
    return ExpandedGraph(g, c, owner, position, tuple(edges))


def accelerate_triplets(eg: ExpandedGraph, r: int, kernel: str | None = None) -> dict:
    """(h, d, f, s) lists for every expanded pair, path lengths 1..r.

    ``h`` counts real vertices entered and ``s`` is the first real vertex
    after the source, i.e. the successor once contracted.
    """
    return maxmin_acceleration(eg.capacity_matrix(), r, eg.real, kernel).pairs


def contract(pairs: dict, n: int) -> dict:
    """Keep real-to-real pairs only."""
    return {(i, j): v for (i, j), v in pairs.items() if i < n and j < n}


def cruise_with_hops(
    p: np.ndarray,
    q: np.ndarray,
    l0: int,
    growth: float = DEFAULT_GROWTH,
    successors: np.ndarray | None = None,
) -> CruiseResult:
    """Cruise costs ``p`` with bridging sets picked from hop counts ``q``."""
    return cruise(p, l0, growth, lengths=q, successors=successors)


def seed_edges(per: PerFlow, g: Graph) -> None:
    """Offer every single edge to the per-flow matrices it can serve.

    Acceleration shallower than ``c`` misses expensive one-hop paths; the
    cruise needs all of them since it starts from a bound of one hop.
    """
    for e in g.edges:
        serve = per.flows <= e.cap
        p, q, sc = per.p[:, e.src, e.dst], per.q[:, e.src, e.dst], per.succ[:, e.src, e.dst]
        take = serve & ((e.cost < p) | ((e.cost == p) & (q > 1)))
        p[take], q[take], sc[take] = e.cost, 1, e.dst


def repair_hops(per: PerFlow, g: Graph) -> None:
    """Make each finite hop count the fewest hops among cheapest stored paths.

    A frontier entry's hop count belongs to its widest path, which need not be
    the one with fewest hops at a lower flow. Per flow and source this is a
    BFS over edges that are tight for the seeded costs, visiting vertices in
    increasing cost; successors follow the same parents.
    """
    n = g.n
    for fi, f in enumerate(per.flows.tolist()):
        p, q, sc = per.p[fi], per.q[fi], per.succ[fi]
        adj = [[] for _ in range(n)]
        for e in g.edges:
            if e.cap >= f:
                adj[e.src].append((e.dst, e.cost))
        for i in range(n):
            row = p[i]
            order = np.argsort(row, kind="stable")
            hops = {i: 0}
            first = {i: NO_WITNESS}
            for v in order.tolist():
                if row[v] >= INF:
                    break
                if v not in hops:
                    continue
                hv, fv = hops[v], first[v]
                for w, cost in adj[v]:
                    if row[v] + cost != row[w]:
                        continue
                    if w not in hops or hv + 1 < hops[w]:
                        hops[w] = hv + 1
                        first[w] = w if v == i else fv
            # vertices not reached through tight edges keep their seeded values
            for w, hw in hops.items():
                if w != i and hw < q[i, w]:
                    q[i, w] = hw
                    sc[i, w] = first[w]


def solve_apsp_af_integer(g: Graph, cfg: SolverConfig | None = None) -> FlowFrontier:
    """Complete (d, f, s) frontiers of a digraph with positive integer costs."""
    cfg = cfg or SolverConfig()
    flows = maximal_flows(g)
    n, t, c = g.n, len(flows), g.max_cost
    plan = plan_phases(n, t, c, cfg.omega, cfg.r, cfg.growth)
    l0 = max(1, plan.r // c)
    stats = SolveStats(plan.r, l0)
    if t == 0:
        return FlowFrontier(n, {}, distance_matrix(g), stats)

    t0 = time.perf_counter()
    eg = expand(g, c)
    pairs = contract(accelerate_triplets(eg, plan.r, cfg.kernel), n)
    per = init_per_flow(pairs, flows, n, with_hops=True)
    seed_edges(per, g)
    repair_hops(per, g)
    t1 = time.perf_counter()
    stats.cruise_iterations = run_cruises(per, l0, plan.growth, cfg.threads)
    out = finalize(pairs, per, n)
    stats.accel_seconds = t1 - t0
    stats.cruise_seconds = time.perf_counter() - t1
    return FlowFrontier(n, out, distance_matrix(g), stats)
