"""Per-pair distance/flow frontiers, flow-demand queries and their documents.

A frontier ``u_ij`` is a list of ``(d, f, s)`` triplets sorted by ``d`` with
``f`` strictly increasing as well: ``f`` is the largest flow any path of cost
at most ``d`` carries, and ``s`` is the vertex after ``i`` on such a path.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .graph import CAP_INF, INF, Graph, distance_matrix


class Triplet(NamedTuple):
    d: int
    f: float
    s: int


class FrontierError(ValueError):
    pass


class QueryResult(NamedTuple):
    d: int
    f: float
    path: list[int]
    lookups: int


@dataclass
class FlowFrontier:
    n: int
    pairs: dict[tuple[int, int], tuple[Triplet, ...]]
    costs: np.ndarray | None = field(default=None, repr=False, compare=False)
    stats: object = field(default=None, repr=False, compare=False)
    _by_d: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _flows: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def get(self, i: int, j: int) -> tuple[Triplet, ...]:
        return self.pairs.get((i, j), ())

    def attach(self, g: Graph) -> "FlowFrontier":
        """Bind the edge costs needed to walk successor chains."""
        if g.n != self.n:
            raise FrontierError(f"graph has {g.n} vertices, frontier {self.n}")
        self.costs = distance_matrix(g)
        return self

    def at_distance(self, i: int, j: int, d: int) -> Triplet | None:
        table = self._by_d.get((i, j))
        if table is None:
            table = {e.d: e for e in self.get(i, j)}
            self._by_d[(i, j)] = table
        return table.get(d)

    def flows_of(self, i: int, j: int) -> list[float]:
        keys = self._flows.get((i, j))
        if keys is None:
            keys = self._flows[(i, j)] = [e.f for e in self.get(i, j)]
        return keys

    def size(self) -> int:
        return sum(len(v) for v in self.pairs.values())


def query(fr: FlowFrontier, i: int, j: int, demand: float) -> QueryResult | None:
    """Shortest path from ``i`` to ``j`` that carries ``demand``, or None.

    Binary search on flow picks the triplet; the path is then walked through
    successors, each next triplet found by its residual distance.
    """
    if fr.costs is None:
        raise FrontierError("frontier has no edge costs attached; call attach(graph)")
    if i == j:
        return QueryResult(0, CAP_INF, [i], 0)
    entries = fr.get(i, j)
    k = bisect_left(fr.flows_of(i, j), demand)
    if k == len(entries):
        return None
    head = entries[k]
    path, v, resid, lookups = [i], i, head.d, 0
    while v != j:
        e = fr.at_distance(v, j, resid)
        lookups += 1
        if e is None or lookups > fr.n:
            raise FrontierError(f"broken successor chain at vertex {v + 1} towards {j + 1}")
        cost = fr.costs[v, e.s]
        if cost >= INF:
            raise FrontierError(f"successor {e.s + 1} of {v + 1} is not adjacent")
        resid -= int(cost)
        v = e.s
        path.append(v)
    if resid != 0:
        raise FrontierError(f"path to {j + 1} does not add up to {head.d}")
    return QueryResult(head.d, head.f, path, lookups)


class BottleneckShortest(NamedTuple):
    d: np.ndarray
    f: np.ndarray


def extract_apbp(fr: FlowFrontier) -> np.ndarray:
    """Maximum bottleneck per pair: last frontier flow (0 = no path, inf diagonal)."""
    out = np.zeros((fr.n, fr.n), dtype=np.float64)
    np.fill_diagonal(out, CAP_INF)
    for (i, j), entries in fr.pairs.items():
        if entries:
            out[i, j] = entries[-1].f
    return out


def extract_apbsp(fr: FlowFrontier) -> BottleneckShortest:
    """Shortest distance per pair and the best bottleneck at that distance."""
    d = np.full((fr.n, fr.n), INF, dtype=np.int64)
    f = np.zeros((fr.n, fr.n), dtype=np.float64)
    np.fill_diagonal(d, 0)
    np.fill_diagonal(f, CAP_INF)
    for (i, j), entries in fr.pairs.items():
        if entries:
            d[i, j], f[i, j] = entries[0].d, entries[0].f
    return BottleneckShortest(d, f)


def _sorted_pairs(fr: FlowFrontier):
    return sorted((k, v) for k, v in fr.pairs.items() if v)


def to_text(fr: FlowFrontier, manifest: dict | None = None) -> str:
    lines = [f"# {k}={v}" for k, v in (manifest or {}).items()]
    lines.append(f"n {fr.n}")
    for (i, j), entries in _sorted_pairs(fr):
        body = ";".join(f"({e.d},{e.f!r},{e.s + 1})" for e in entries)
        lines.append(f"{i + 1} {j + 1} : {body}")
    return "\n".join(lines) + "\n"


def to_json(fr: FlowFrontier, manifest: dict | None = None) -> str:
    doc = {"n": fr.n}
    if manifest:
        doc["manifest"] = manifest
    doc["pairs"] = {
        f"{i + 1},{j + 1}": [{"d": int(e.d), "f": float(e.f), "s": int(e.s) + 1} for e in entries]
        for (i, j), entries in _sorted_pairs(fr)
    }
    return json.dumps(doc, indent=1) + "\n"


def from_text(text: str) -> FlowFrontier:
    n = None
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if n is None:
                key, val = line.split()
                if key != "n":
                    raise ValueError
                n = int(val)
                continue
            head, body = line.split(":", 1)
            i, j = (int(x) - 1 for x in head.split())
            entries = []
            for item in body.strip().split(";"):
                d, f, s = item.strip().strip("()").split(",")
                entries.append(Triplet(int(d), float(f), int(s) - 1))
        except ValueError:
            raise FrontierError(f"line {lineno}: cannot parse {line!r}") from None
        pairs[(i, j)] = tuple(entries)
    if n is None:
        raise FrontierError("missing 'n' header")
    return FlowFrontier(n, pairs)


def from_json(text: str) -> FlowFrontier:
    try:
        doc = json.loads(text)
        pairs = {}
        for key, entries in doc["pairs"].items():
            i, j = (int(x) - 1 for x in key.split(","))
            pairs[(i, j)] = tuple(Triplet(int(e["d"]), float(e["f"]), int(e["s"]) - 1) for e in entries)
        return FlowFrontier(int(doc["n"]), pairs)
    except (KeyError, ValueError, TypeError, AttributeError) as exc:
        raise FrontierError(f"malformed frontier document: {exc}") from None


def load_frontier(text: str) -> FlowFrontier:
    """Read either document flavour, sniffing on the first non-blank character."""
    return from_json(text) if text.lstrip().startswith("{") else from_text(text)
