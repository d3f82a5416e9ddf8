"""Seeded random digraphs with a prescribed number of distinct capacities."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class GraphSpec:
    n: int
    density: float
    t: int | None = None
    c: int = 1
    seed: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


def random_graph(spec: GraphSpec) -> Graph:
    """Each ordered pair becomes an edge with probability ``density``.

    Costs are uniform in ``1..c``. With ``t`` set, exactly ``t`` distinct
    capacities are drawn and each is forced onto at least one edge; otherwise
    capacities are free draws from ``1..100``.
    """
    n, p, t, c = spec.n, spec.density, spec.t, spec.c
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {p}")
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    rng = np.random.default_rng(spec.seed)
    src, dst = np.nonzero(~np.eye(n, dtype=bool))
    keep = rng.random(src.size) < p
    src, dst = src[keep], dst[keep]
    m = src.size
    costs = rng.integers(1, c + 1, size=m)
    if t is None:
        caps = rng.integers(1, 101, size=m).astype(np.float64)
    else:
        if t < 1 or t > m:
            raise ValueError(f"cannot place t={t} distinct capacities on {m} edges")
        pool = rng.choice(np.arange(1, 10 * t + 1), size=t, replace=False).astype(np.float64)
        caps = np.concatenate([pool, rng.choice(pool, size=m - t)])
        rng.shuffle(caps)
    return Graph.from_edges(
        n, zip(src.tolist(), dst.tolist(), costs.tolist(), caps.tolist())
    )
