from __future__ import annotations

from dataclasses import dataclass, field

from .agm import DEFAULT_GROWTH, DEFAULT_OMEGA


@dataclass(frozen=True)
class SolverConfig:
    """Knobs shared by both APSP-AF solvers.

    ``r`` overrides the balanced acceleration depth (in edges of the unit-cost
    graph that is accelerated, i.e. the expanded graph for integer costs).
    ``threads`` fans the per-flow cruises out; results do not depend on it.
    """

    omega: float = DEFAULT_OMEGA
    growth: float = DEFAULT_GROWTH
    r: int | None = None
    threads: int = 1
    kernel: str | None = None


@dataclass
class SolveStats:
    r: int
    l0: int
    accel_seconds: float = 0.0
    cruise_seconds: float = 0.0
    cruise_iterations: list = field(default_factory=list)
