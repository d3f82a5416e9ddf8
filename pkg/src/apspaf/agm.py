"""Acceleration/cruising APSD on unit-cost digraphs, and the shared cruise.

The cruise is used three ways: by :func:`agm_apsd` on a Boolean-accelerated
distance matrix, per maximal flow by the unit-cost APSP-AF solver, and, with
a hop-count matrix steering the bridging sets, by the integer-cost solver.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .graph import INF, Graph, adjacency_matrix, distance_matrix
from .semiring import boolean_product

DEFAULT_OMEGA = 2.373
DEFAULT_GROWTH = 1.5


@dataclass(frozen=True)
class PhasePlan:
    r: int
    growth: float = DEFAULT_GROWTH
    omega: float = DEFAULT_OMEGA


def _clamp(r: float, hi: int) -> int:
    return max(1, min(int(round(r)), max(1, hi)))


def plan_phases(
    n: int,
    t: int,
    c: int = 1,
    omega: float = DEFAULT_OMEGA,
    r_override: int | None = None,
    growth: float = DEFAULT_GROWTH,
) -> PhasePlan:
    """Pick the acceleration depth that balances the two phases.

    ``r = sqrt(t) * c**((-1-omega)/4) * n**((3-omega)/4)``, rounded and clamped
    to ``[1, c*n - 1]``; with ``c == 1`` this is the unit-cost rule. Depth is
    counted in edges of the (expanded) unit-cost graph.
    """
    if not 2.0 <= omega <= 3.0:
        raise ValueError(f"omega must lie in [2, 3], got {omega}")
    if not 1.0 < growth < 2.0:
        raise ValueError(f"growth must lie in (1, 2), got {growth}")
    if n < 1 or t < 0 or c < 1:
        raise ValueError(f"invalid sizes n={n} t={t} c={c}")
    hi = c * n - 1
    if r_override is not None:
        if not 1 <= r_override <= max(1, hi):
            raise ValueError(f"r override {r_override} outside [1, {hi}]")
        return PhasePlan(int(r_override), growth, omega)
    raw = math.sqrt(t) * c ** ((-1.0 - omega) / 4.0) * n ** ((3.0 - omega) / 4.0)
    return PhasePlan(_clamp(raw, hi), growth, omega)


def next_bound(bound: int, growth: float) -> int:
    return max(bound + 1, math.ceil(growth * bound))


def window_low(bound: int, nxt: int) -> int:
    # Suffixes past the bridging vertex must stay within the solved bound,
    # which needs low >= nxt - bound; for growth <= 3/2 this is ceil(bound/2).
    return max(-(-bound // 2), nxt - bound)


def select_bridging_set(
    d: np.ndarray, bound: int, row: int, low: int | None = None, gaps: bool = False
) -> np.ndarray:
    """Smallest class of equal values in ``d[row]`` inside ``[low, bound]``.

    ``low`` defaults to ``ceil(bound/2)``. Ties on class size go to the larger
    value. Returns the column indices in ascending order (possibly empty).

    With ``gaps`` an absent value counts as an empty class, so the result is
    empty: on exact distance rows a missing layer means nothing lies beyond it.
    """
    if low is None:
        low = -(-bound // 2)
    vals = d[row]
    mask = (vals >= low) & (vals <= bound)
    if not mask.any():
        return np.empty(0, dtype=np.int64)
    uniq, counts = np.unique(vals[mask], return_counts=True)
    if gaps and uniq.size < bound - low + 1:
        return np.empty(0, dtype=np.int64)
    # unique sorts ascending, so scanning from the top breaks ties upward.
    pick = uniq[::-1][np.argmin(counts[::-1])]
    return np.flatnonzero(vals == pick)


class IterationStats(NamedTuple):
    bound: int
    next_bound: int
    bridging: int
    seconds: float


@dataclass
class CruiseResult:
    d: np.ndarray
    lengths: np.ndarray | None = None
    successors: np.ndarray | None = None
    iterations: list[IterationStats] = field(default_factory=list)


def cruise(
    d: np.ndarray,
    l0: int,
    growth: float = DEFAULT_GROWTH,
    lengths: np.ndarray | None = None,
    successors: np.ndarray | None = None,
) -> CruiseResult:
    """Repeated bridging-set squaring of ``d`` until the bound reaches ``n``.

    ``d`` must be exact for every pair whose shortest path has at most ``l0``
    edges. With ``lengths`` (hop counts of the stored paths) the bridging sets
    come from ``lengths`` and both matrices are relaxed together,
    lexicographically on (cost, hops), smallest bridging vertex on ties.
    ``successors`` is carried along when given. Inputs are not modified.
    """
    n = d.shape[0]
    d = d.copy()
    steer = lengths.copy() if lengths is not None else None
    succ = successors.copy() if successors is not None else None
    out = CruiseResult(d, steer, succ)
    bound = max(1, int(l0))
    while bound < n:
        t0 = time.perf_counter()
        nxt = next_bound(bound, growth)
        low = window_low(bound, nxt)
        src = steer if steer is not None else d
        new_d = d.copy()
        new_h = steer.copy() if steer is not None else None
        new_s = succ.copy() if succ is not None else None
        total = 0
        for i in range(n):
            bridge = select_bridging_set(src, bound, i, low, gaps=True)
            if bridge.size == 0:
                continue
            total += bridge.size
            cand = np.minimum(d[i, bridge][:, None] + d[bridge, :], INF)
            m = cand.min(axis=0)
            tight = cand == m
            if steer is not None:
                hops = np.minimum(steer[i, bridge][:, None] + steer[bridge, :], INF)
                hops = np.where(tight, hops, INF)
                hmin = hops.min(axis=0)
                tight &= hops == hmin
                better = (m < d[i]) | ((m == d[i]) & (hmin < steer[i]))
            else:
                better = m < d[i]
            better &= m < INF
            if not better.any():
                continue
            k = bridge[np.argmax(tight, axis=0)]
            cols = np.flatnonzero(better)
            new_d[i, cols] = m[cols]
            if new_h is not None:
                new_h[i, cols] = hmin[cols]
            if new_s is not None:
                new_s[i, cols] = succ[i, k[cols]]
        d = new_d
        if new_h is not None:
            steer = new_h
        if new_s is not None:
            succ = new_s
        out.iterations.append(IterationStats(bound, nxt, total, time.perf_counter() - t0))
        bound = nxt
    out.d, out.lengths, out.successors = d, steer, succ
    return out


def agm_apsd(
    g: Graph,
    omega: float = DEFAULT_OMEGA,
    r: int | None = None,
    growth: float = DEFAULT_GROWTH,
    kernel: str | None = None,
    trace: list | None = None,
) -> np.ndarray:
    """All-pairs hop distances of a unit-cost digraph (INF when unreachable).

    Boolean products with the adjacency matrix settle distances up to ``r``;
    bridging-set squaring finishes the rest. By default ``r`` balances the
    phases, ``r = n**((3-omega)/2)``. Per-iteration cruise statistics are
    appended to ``trace`` when given.
    """
    if not g.unit_costs:
        raise ValueError("agm_apsd needs unit edge costs")
    if not 2.0 <= omega <= 3.0:
        raise ValueError(f"omega must lie in [2, 3], got {omega}")
    n = g.n
    if r is None:
        r = _clamp(n ** ((3.0 - omega) / 2.0), n - 1)
    d = distance_matrix(g)
    adj = adjacency_matrix(g)
    reach = adj
    for step in range(2, r + 1):
        reach = boolean_product(reach, adj, kernel).values
        d[(reach == 1) & (d == INF)] = step
    res = cruise(d, r, growth)
    if trace is not None:
        trace.extend(res.iterations)
    return res.d
