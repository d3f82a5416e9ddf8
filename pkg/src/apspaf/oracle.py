"""Brute-force references: per-flow BFS/Dijkstra, bottleneck closures, and a
frontier verifier.

Nothing here touches the matrix products or the solvers; plain Python loops
over adjacency lists only.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field

from .frontier import FlowFrontier, FrontierError, Triplet, query
from .graph import Graph

UNREACHABLE = math.inf


def _adjacency(g: Graph, flow: float):
    adj = [[] for _ in range(g.n)]
    for e in g.edges:
        if e.cap >= flow:
            adj[e.src].append((e.dst, e.cost))
    return adj


def _bfs(adj, src):
    dist = [UNREACHABLE] * len(adj)
    dist[src] = 0
    todo = deque([src])
    while todo:
        v = todo.popleft()
        for w, _ in adj[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[v] + 1
                todo.append(w)
    return dist


def _dijkstra(adj, src):
    dist = [UNREACHABLE] * len(adj)
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for w, cost in adj[v]:
            nd = d + cost
            if nd < dist[w]:
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return dist


def per_flow_apsp(g: Graph, flow: float) -> list[list[float]]:
    """All-pairs distances using only edges with capacity >= ``flow``.

    Entries are ints, ``math.inf`` when unreachable.
    """
    adj = _adjacency(g, flow)
    run = _bfs if g.unit_costs else _dijkstra
    return [run(adj, s) for s in range(g.n)]


def brute_apbp(g: Graph) -> list[list[float]]:
    """Widest-path bottleneck per pair by cubic relaxation (0 = no path)."""
    n = g.n
    b = [[0.0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = math.inf
    for e in g.edges:
        b[e.src][e.dst] = e.cap
    for k in range(n):
        bk = b[k]
        for i in range(n):
            bik = b[i][k]
            if bik == 0.0:
                continue
            bi = b[i]
            for j in range(n):
                v = bik if bik < bk[j] else bk[j]
                if v > bi[j]:
                    bi[j] = v
    return b


def brute_apbsp(g: Graph) -> tuple[list[list[float]], list[list[float]]]:
    """Shortest distance per pair and the widest bottleneck among the shortest paths.

    Per source: distances first, then a sweep in increasing distance over the
    edges that lie on shortest paths.
    """
    n = g.n
    adj = _adjacency(g, -math.inf)
    run = _bfs if g.unit_costs else _dijkstra
    dist_rows, cap_rows = [], []
    for s in range(n):
        dist = run(adj, s)
        best = [0.0] * n
        best[s] = math.inf
        for v in sorted((v for v in range(n) if dist[v] < UNREACHABLE), key=lambda v: dist[v]):
            for e in g.edges:
                if e.src == v and dist[v] + e.cost == dist[e.dst]:
                    best[e.dst] = max(best[e.dst], min(best[v], e.cap))
        dist_rows.append(dist)
        cap_rows.append(best)
    return dist_rows, cap_rows


@dataclass
class Mismatch:
    kind: str  # "distance", "monotonicity", "size", "path"
    i: int
    j: int
    flow: float | None
    detail: str

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "i": self.i + 1,
            "j": self.j + 1,
            "flow": self.flow,
            "detail": self.detail,
        }


@dataclass
class OracleReport:
    pairs_checked: int = 0
    flows_checked: int = 0
    paths_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "pairs_checked": self.pairs_checked,
            "flows_checked": self.flows_checked,
            "paths_checked": self.paths_checked,
            "mismatches": [m.as_dict() for m in self.mismatches],
        }


def _min_distance(entries, flow):
    for e in entries:
        if e.f >= flow:
            return e.d
    return UNREACHABLE


def verify_frontier(g: Graph, fr: FlowFrontier, check_paths: bool = True) -> OracleReport:
    """Check a solver's frontier against per-flow shortest paths.

    Every pair and maximal flow is compared with the oracle distance; each
    frontier must increase strictly in both coordinates; and, when
    ``check_paths`` is set, every query path must exist in ``g``, cost exactly
    its reported distance and carry the queried flow.
    """
    rep = OracleReport()
    flows = sorted({e.cap for e in g.edges})
    n = g.n
    if fr.n != n:
        rep.mismatches.append(Mismatch("size", 0, 0, None, f"frontier n={fr.n}, graph n={n}"))
        return rep
    if fr.costs is None:
        fr.attach(g)
    rep.flows_checked = len(flows)
    for (i, j), entries in sorted(fr.pairs.items()):
        if i == j and entries:
            rep.mismatches.append(Mismatch("size", i, j, None, "diagonal pair has entries"))
        for a, b in zip(entries, entries[1:]):
            if not (a.d < b.d and a.f < b.f):
                rep.mismatches.append(
                    Mismatch("monotonicity", i, j, None, f"({a.d},{a.f}) then ({b.d},{b.f})")
                )
    for f in flows:
        ref = per_flow_apsp(g, f)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                entries = fr.get(i, j)
                got = _min_distance(entries, f)
                want = ref[i][j]
                if got != want:
                    rep.mismatches.append(
                        Mismatch("distance", i, j, f, f"frontier {got}, oracle {want}")
                    )
                    continue
                if check_paths and got < UNREACHABLE:
                    _check_path(g, fr, i, j, f, got, rep)
    rep.pairs_checked = n * (n - 1)
    return rep


def _check_path(g, fr, i, j, f, d, rep):
    rep.paths_checked += 1
    try:
        res = query(fr, i, j, f)
    except FrontierError as exc:
        rep.mismatches.append(Mismatch("path", i, j, f, str(exc)))
        return
    if res is None or res.d != d:
        rep.mismatches.append(Mismatch("path", i, j, f, f"query returned {res}"))
        return
    cost, width = 0, math.inf
    for a, b in zip(res.path, res.path[1:]):
        e = g.edge(a, b)
        if e is None:
            rep.mismatches.append(Mismatch("path", i, j, f, f"no edge {a + 1}->{b + 1}"))
            return
        cost += e.cost
        width = min(width, e.cap)
    if cost != d or width < f or res.lookups > len(res.path) - 1:
        rep.mismatches.append(
            Mismatch("path", i, j, f, f"cost {cost} width {width} lookups {res.lookups}")
        )


def oracle_frontier(g: Graph) -> FlowFrontier:
    """Frontiers by re-solving shortest paths once per maximal flow.

    This is the straightforward baseline; successors are any out-neighbour
    that stays on a cheapest path for the entry's flow.
    """
    n = g.n
    flows = sorted({e.cap for e in g.edges})
    tables = [per_flow_apsp(g, f) for f in flows]
    adj = g.out_edges()
    pairs = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lst = []
            for f, dist in zip(flows, tables):
                d = dist[i][j]
                if d == UNREACHABLE:
                    break
                if lst and lst[-1][0] == d:
                    lst[-1] = (d, f, dist)
                else:
                    lst.append((d, f, dist))
            if not lst:
                continue
            entries = []
            for d, f, dist in lst:
                s = next(
                    e.dst
                    for e in adj[i]
                    if e.cap >= f and e.cost + dist[e.dst][j] == d
                )
                entries.append(Triplet(int(d), f, s))
            pairs[(i, j)] = tuple(entries)
    return FlowFrontier(n, pairs).attach(g)
