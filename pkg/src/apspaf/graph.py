"""Directed graphs with integer edge costs and ordered edge capacities.

Vertices are 0-based inside the library. The edge-list text format and every
CLI document use 1-based ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

# Distance/hop sentinel. Two sentinels still sum below int64 max, so (min,+)
# can add first and clamp afterwards.
INF = np.iinfo(np.int64).max // 2
CAP_INF = np.inf


class GraphError(ValueError):
    """Raised for malformed or invalid graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Edge(NamedTuple):
    src: int
    dst: int
    cost: int
    cap: float


@dataclass(frozen=True)
class Graph:
    """Simple digraph: no self-loops, at most one edge per ordered pair.

    Construct through :meth:`from_edges` or :func:`load_graph`, both of which
    validate.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({(e.src, e.dst): k for k, e in enumerate(self.edges)})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Graph":
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        checked = []
        index = {}
        for e in edges:
            src, dst, cost, cap = e
            edge = Edge(int(src), int(dst), cost, float(cap))
            _validate_edge(edge, n)
            key = (edge.src, edge.dst)
            if key in index:
                raise GraphError(f"duplicate edge {_fmt(edge)}")
            index[key] = len(checked)
            checked.append(edge)
        return cls(n, tuple(checked))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_cost(self) -> int:
        """Upper bound c on edge costs (1 for an edgeless graph)."""
        return max((e.cost for e in self.edges), default=1)

    @property
    def unit_costs(self) -> bool:
        return all(e.cost == 1 for e in self.edges)

    def edge(self, src: int, dst: int) -> Edge | None:
        k = self._index.get((src, dst))
        return None if k is None else self.edges[k]

    def out_edges(self) -> list[list[Edge]]:
        adj: list[list[Edge]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.src].append(e)
        return adj


def _fmt(e: Edge) -> str:
    return f"({e.src + 1},{e.dst + 1},cost={e.cost},cap={e.cap!r})"


def _validate_edge(e: Edge, n: int) -> None:
    if not (0 <= e.src < n and 0 <= e.dst < n):
        raise GraphError(f"edge {_fmt(e)} has an endpoint outside 1..{n}")
    if e.src == e.dst:
        raise GraphError(f"self-loop {_fmt(e)}")
    if isinstance(e.cost, bool) or not isinstance(e.cost, (int, np.integer)) or e.cost < 1:
        raise GraphError(f"edge {_fmt(e)} needs a positive integer cost")
    if not (e.cap > 0) or np.isinf(e.cap):
        raise GraphError(f"edge {_fmt(e)} needs a finite positive capacity")


def load_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n m`` then ``m`` lines ``src dst cost cap``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty document, expected header 'n m'")

    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphError("header must be 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError("header must hold two integers", lineno) from None
    if n < 1 or m < 0:
        raise GraphError(f"invalid header n={n} m={m}", lineno)
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}", lineno)

    edges = []
    index: dict[tuple[int, int], int] = {}
    for lineno, tok in body:
        if len(tok) != 4:
            raise GraphError("edge line must be 'src dst cost cap'", lineno)
        try:
            src, dst, cost = int(tok[0]), int(tok[1]), int(tok[2])
            cap = float(tok[3])
        except ValueError:
            raise GraphError(f"cannot parse edge {' '.join(tok)!r}", lineno) from None
        edge = Edge(src - 1, dst - 1, cost, cap)
        try:
            _validate_edge(edge, n)
        except GraphError as exc:
            raise GraphError(str(exc), lineno) from None
        if (edge.src, edge.dst) in index:
            raise GraphError(f"duplicate edge {_fmt(edge)}", lineno)
        index[(edge.src, edge.dst)] = len(edges)
        edges.append(edge)
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{e.src + 1} {e.dst + 1} {e.cost} {e.cap!r}" for e in g.edges]
    return "\n".join(lines) + "\n"


def maximal_flows(g: Graph) -> np.ndarray:
    """Distinct edge capacities in strictly increasing order (length ``t``)."""
    return np.unique(np.array([e.cap for e in g.edges], dtype=np.float64))


def capacity_matrix(g: Graph) -> np.ndarray:
    """Single-edge bottleneck matrix: ``inf`` diagonal, ``cap`` on edges, 0 elsewhere."""
    c = np.zeros((g.n, g.n), dtype=np.float64)
    np.fill_diagonal(c, CAP_INF)
    for e in g.edges:
        c[e.src, e.dst] = e.cap
    return c


def distance_matrix(g: Graph) -> np.ndarray:
    """Single-edge distance matrix: zero diagonal, ``cost`` on edges, INF elsewhere."""
    d = np.full((g.n, g.n), INF, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for e in g.edges:
        d[e.src, e.dst] = e.cost
    return d


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Reachability within one edge, diagonal set (``r_ii = 1``)."""
    r = np.eye(g.n, dtype=np.uint8)
    for e in g.edges:
        r[e.src, e.dst] = 1
    return r
