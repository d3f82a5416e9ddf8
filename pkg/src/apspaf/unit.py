"""APSP for all flows on unit-cost digraphs.

Acceleration runs (max,min) products with the single-edge capacity matrix and
records a frontier entry whenever a pair's bottleneck strictly improves.
Those entries seed one distance matrix per maximal flow, each finished by the
bridging-set cruise, and finalization folds the per-flow distances back into
the frontiers.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

import numpy as np

from .agm import cruise, plan_phases
from .config import SolverConfig, SolveStats
from .frontier import FlowFrontier, Triplet
from .graph import INF, Graph, capacity_matrix, distance_matrix, maximal_flows
from .semiring import NO_WITNESS, maxmin_product


class HopTriplet(NamedTuple):
    h: int
    d: int
    f: float
    s: int


class Acceleration(NamedTuple):
    pairs: dict
    capacity: np.ndarray
    depth: int


def maxmin_acceleration(
    c1: np.ndarray, r: int, real: np.ndarray, kernel: str | None = None
) -> Acceleration:
    """Bottleneck improvements for path lengths 1..r as (h, d, f, s) lists.

    ``real`` flags vertices whose entry counts as a hop; ``s`` is the first
    flagged vertex after the source (NO_WITNESS while there is none). Both
    are inherited from the prefix triplet of the witness, which precedes the
    target because the running matrix is multiplied by ``c1`` on the right.
    """
    n = c1.shape[0]
    real = np.asarray(real, dtype=bool)
    cols = np.arange(n)
    # Bookkeeping of each pair's latest triplet; the diagonal acts as the
    # empty prefix (h = 0, no successor yet).
    last_h = np.zeros((n, n), dtype=np.int64)
    last_s = np.full((n, n), NO_WITNESS, dtype=np.int64)
    pairs: dict[tuple[int, int], list[HopTriplet]] = {}

    prev = np.zeros((n, n), dtype=np.float64)
    np.fill_diagonal(prev, np.inf)
    cur, wit = c1, np.tile(np.arange(n)[:, None], (1, n))
    depth = 1
    while True:
        improved = cur > prev
        np.fill_diagonal(improved, False)
        ii, jj = np.nonzero(improved)
        if ii.size == 0:
            break
        kk = wit[ii, jj]
        h = last_h[ii, kk] + real[jj]
        s_pre = last_s[ii, kk]
        s = np.where(s_pre != NO_WITNESS, s_pre, np.where(real[jj], cols[jj], NO_WITNESS))
        last_h[ii, jj] = h
        last_s[ii, jj] = s
        f = cur[ii, jj]
        for a, b, hh, ff, ss in zip(ii.tolist(), jj.tolist(), h.tolist(), f.tolist(), s.tolist()):
            pairs.setdefault((a, b), []).append(HopTriplet(hh, depth, ff, ss))
        if depth >= r:
            break
        prev = cur
        cur, wit = maxmin_product(prev, c1, kernel)
        depth += 1
    return Acceleration(pairs, cur, depth)


def accelerate_maxmin(g: Graph, r: int, kernel: str | None = None):
    """Frontier entries with ``d <= r`` for every pair, plus the final capacity matrix."""
    acc = maxmin_acceleration(capacity_matrix(g), r, np.ones(g.n, dtype=bool), kernel)
    pairs = {k: [Triplet(e.d, e.f, e.s) for e in v] for k, v in acc.pairs.items()}
    return pairs, acc.capacity


class PerFlow(NamedTuple):
    flows: np.ndarray
    p: np.ndarray  # (t, n, n) distances
    succ: np.ndarray  # (t, n, n) successor of the row vertex
    q: np.ndarray | None = None  # (t, n, n) hop counts, integer costs only


def init_per_flow(pairs: dict, flows: np.ndarray, n: int, with_hops: bool = False) -> PerFlow:
    """One distance matrix per maximal flow, read off the partial frontiers.

    ``p[f][i, j]`` is the distance of the first entry whose flow is at least
    ``f``. Entry flows are maximal flows themselves, so a single forward step
    per flow walks the entry list in step with the flow list.
    """
    t = len(flows)
    p = np.full((t, n, n), INF, dtype=np.int64)
    succ = np.full((t, n, n), NO_WITNESS, dtype=np.int64)
    q = np.full((t, n, n), INF, dtype=np.int64) if with_hops else None
    diag = np.arange(n)
    p[:, diag, diag] = 0
    if q is not None:
        q[:, diag, diag] = 0
    flow_list = flows.tolist()
    for (i, j), entries in pairs.items():
        if i == j or not entries:
            continue
        k, s = 0, len(entries)
        for fi, f in enumerate(flow_list):
            if f > entries[k].f:
                k += 1
            if k >= s:
                break
            e = entries[k]
            p[fi, i, j] = e.d
            succ[fi, i, j] = e.s
            if q is not None:
                q[fi, i, j] = e.h
    return PerFlow(flows, p, succ, q)


def run_cruises(per: PerFlow, l0: int, growth: float, threads: int = 1) -> list:
    """Cruise every per-flow matrix in place; returns per-flow iteration stats."""

    def one(fi):
        res = cruise(
            per.p[fi], l0, growth,
            lengths=None if per.q is None else per.q[fi],
            successors=per.succ[fi],
        )
        per.p[fi] = res.d
        per.succ[fi] = res.successors
        if per.q is not None:
            per.q[fi] = res.lengths
        return res.iterations

    idx = range(len(per.flows))
    if threads > 1 and len(per.flows) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, idx))
    return [one(fi) for fi in idx]


def finalize(pairs: dict, per: PerFlow, n: int) -> dict[tuple[int, int], tuple[Triplet, ...]]:
    """Fold per-flow distances back into the partial frontiers.

    For flows beyond a pair's last entry, an equal distance replaces that
    entry (bigger flow, same cost) and a larger one is appended.
    """
    flows = per.flows.tolist()
    p = np.ascontiguousarray(per.p.transpose(1, 2, 0)).tolist()
    sc = np.ascontiguousarray(per.succ.transpose(1, 2, 0)).tolist()
    out = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lst = [Triplet(e.d, e.f, e.s) for e in pairs.get((i, j), ())]
            dcol, scol = p[i][j], sc[i][j]
            for fi, f in enumerate(flows):
                d = dcol[fi]
                if d >= INF:
                    # distances only grow with the flow
                    break
                if not lst:
                    lst.append(Triplet(d, f, scol[fi]))
                    continue
                last = lst[-1]
                if f > last.f:
                    if d == last.d:
                        lst[-1] = Triplet(d, f, scol[fi])
                    else:
                        lst.append(Triplet(d, f, scol[fi]))
            if lst:
                out[(i, j)] = tuple(lst)
    return out


def solve_apsp_af_unit(g: Graph, cfg: SolverConfig | None = None) -> FlowFrontier:
    """Complete (d, f, s) frontiers of a unit-cost digraph."""
    cfg = cfg or SolverConfig()
    if not g.unit_costs:
        raise ValueError("unit solver needs unit edge costs; use the integer solver")
    flows = maximal_flows(g)
    n, t = g.n, len(flows)
    plan = plan_phases(n, t, 1, cfg.omega, cfg.r, cfg.growth)
    stats = SolveStats(plan.r, plan.r)
    if t == 0:
        return FlowFrontier(n, {}, distance_matrix(g), stats)

    t0 = time.perf_counter()
    acc = maxmin_acceleration(capacity_matrix(g), plan.r, np.ones(n, dtype=bool), cfg.kernel)
    per = init_per_flow(acc.pairs, flows, n)
    t1 = time.perf_counter()
    stats.cruise_iterations = run_cruises(per, plan.r, plan.growth, cfg.threads)
    pairs = finalize(acc.pairs, per, n)
    stats.accel_seconds = t1 - t0
    stats.cruise_seconds = time.perf_counter() - t1
    return FlowFrontier(n, pairs, distance_matrix(g), stats)
