"""All-pairs shortest paths for all flows (APSP-AF) on directed graphs."""

from .agm import agm_apsd, cruise, plan_phases, select_bridging_set
from .config import SolverConfig
from .frontier import FlowFrontier, Triplet, extract_apbp, extract_apbsp, query
from .graph import Graph, GraphError, load_graph, maximal_flows, serialize_graph
from .integer import expand, solve_apsp_af_integer
from .oracle import verify_frontier
from .unit import solve_apsp_af_unit

__all__ = [
    "FlowFrontier",
    "Graph",
    "GraphError",
    "SolverConfig",
    "Triplet",
    "agm_apsd",
    "cruise",
    "expand",
    "extract_apbp",
    "extract_apbsp",
    "load_graph",
    "maximal_flows",
    "plan_phases",
    "query",
    "select_bridging_set",
    "serialize_graph",
    "solve_apsp_af_integer",
    "solve_apsp_af_unit",
    "verify_frontier",
]
