"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error, 3 when a
query has no path carrying the demand.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .config import SolverConfig
from .frontier import (
    FrontierError,
    extract_apbp,
    extract_apbsp,
    load_frontier,
    query,
    to_json,
    to_text,
)
from .generate import GraphSpec, random_graph
from .graph import INF, Graph, GraphError, load_graph, serialize_graph
from .integer import solve_apsp_af_integer
from .oracle import oracle_frontier, verify_frontier
from .unit import solve_apsp_af_unit

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_NO_PATH = 0, 1, 2, 3

BENCH_COLUMNS = [
    "n", "m", "t", "c", "solver", "r_used", "wall_ms", "phase_ms_accel", "phase_ms_cruise",
]


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args) -> SolverConfig:
    return SolverConfig(omega=args.omega, growth=args.growth, r=args.r, threads=args.threads)


def pick_solver(name: str, g: Graph):
    if name == "auto":
        name = "unit" if g.unit_costs else "integer"
    if name == "unit":
        return name, solve_apsp_af_unit
    if name == "integer":
        return name, solve_apsp_af_integer
    if name == "oracle":
        return name, lambda g, cfg: oracle_frontier(g)
    raise CliError(f"unknown solver {name!r}")


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--solver", choices=["auto", "unit", "integer", "oracle"], default="auto")
    p.add_argument("--omega", type=float, default=SolverConfig.omega)
    p.add_argument("--growth", type=float, default=SolverConfig.growth)
    p.add_argument("--r", type=int, default=None, help="override the acceleration depth")
    p.add_argument("--threads", type=int, default=1)


def cmd_generate(args) -> int:
    spec = GraphSpec(args.n, args.density, args.t, args.c, args.seed)
    g = random_graph(spec)
    header = "# generated " + " ".join(f"{k}={v}" for k, v in spec.as_dict().items()) + "\n"
    _emit(header + serialize_graph(g), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_graph(_read(args.graph))
    name, solver = pick_solver(args.solver, g)
    cfg = _config(args)
    fr = solver(g, cfg)
    manifest = {
        "input": args.graph,
        "solver": name,
        "omega": cfg.omega,
        "growth": cfg.growth,
        "r": cfg.r if cfg.r is not None else "auto",
    }
    if fr.stats is not None:
        manifest["r_used"] = fr.stats.r
    writer = to_json if args.format == "json" else to_text
    _emit(writer(fr, manifest), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(_read(args.graph))
    fr = load_frontier(_read(args.frontier))
    rep = verify_frontier(g, fr, check_paths=not args.no_paths)
    doc = rep.as_dict()
    doc["manifest"] = {"graph": args.graph, "frontier": args.frontier}
    if args.format == "json":
        _emit(json.dumps(doc, indent=1) + "\n", args.output)
    else:
        lines = [
            f"# graph={args.graph} frontier={args.frontier}",
            f"{'OK' if rep.ok else 'MISMATCH'} pairs={rep.pairs_checked} "
            f"flows={rep.flows_checked} paths={rep.paths_checked} "
            f"mismatches={len(rep.mismatches)}",
        ]
        lines += [
            f"{m.kind} {m.i + 1} {m.j + 1} flow={m.flow} {m.detail}" for m in rep.mismatches
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_query(args) -> int:
    g = load_graph(_read(args.graph))
    fr = load_frontier(_read(args.frontier)).attach(g)
    i, j = args.i - 1, args.j - 1
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise CliError(f"vertices must lie in 1..{g.n}")
    res = query(fr, i, j, args.demand)
    if args.format == "json":
        doc = {"i": args.i, "j": args.j, "demand": args.demand}
        if res is None:
            doc["path"] = None
        else:
            doc.update(d=res.d, f=res.f, path=[v + 1 for v in res.path])
        print(json.dumps(doc))
    elif res is None:
        print("no path")
    else:
        print(f"d={res.d} f={res.f!r} path={' '.join(str(v + 1) for v in res.path)}")
    return EXIT_NO_PATH if res is None else EXIT_OK


def cmd_extract(args) -> int:
    fr = load_frontier(_read(args.frontier))
    rows = []
    if args.kind == "apbp":
        header = ["i", "j", "f"]
        b = extract_apbp(fr)
        for i in range(fr.n):
            for j in range(fr.n):
                if i != j and b[i, j] > 0:
                    rows.append([i + 1, j + 1, float(b[i, j])])
    else:
        header = ["i", "j", "d", "f"]
        bs = extract_apbsp(fr)
        for i in range(fr.n):
            for j in range(fr.n):
                if i != j and bs.d[i, j] < INF:
                    rows.append([i + 1, j + 1, int(bs.d[i, j]), float(bs.f[i, j])])
    if args.format == "json":
        text = json.dumps([dict(zip(header, r)) for r in rows]) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = "".join(" ".join(repr(x) if isinstance(x, float) else str(x) for x in r) + "\n" for r in rows)
    _emit(text, args.output)
    return EXIT_OK


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def bench_rows(ns, ts, cs, density, seed, solver="auto", cfg=None, repeat=1, log=None):
    """Time a solver against the per-flow baseline over an (n, t, c) grid."""
    cfg = cfg or SolverConfig()
    rows = []
    for n in ns:
        for c in cs:
            for t in ts:
                try:
                    g = random_graph(GraphSpec(n, density, t, c, seed))
                except ValueError as exc:
                    if log:
                        log(f"skip n={n} t={t} c={c}: {exc}")
                    continue
                name, fn = pick_solver(solver, g)
                for label, run in ((name, fn), ("baseline", lambda g, cfg: oracle_frontier(g))):
                    best, fr = None, None
                    for _ in range(repeat):
                        t0 = time.perf_counter()
                        fr = run(g, cfg)
                        dt = time.perf_counter() - t0
                        best = dt if best is None else min(best, dt)
                    st = fr.stats
                    rows.append({
                        "n": n, "m": g.m, "t": t, "c": c, "solver": label,
                        "r_used": st.r if st else "",
                        "wall_ms": round(best * 1e3, 3),
                        "phase_ms_accel": round(st.accel_seconds * 1e3, 3) if st else "",
                        "phase_ms_cruise": round(st.cruise_seconds * 1e3, 3) if st else "",
                    })
    return rows


def cmd_bench(args) -> int:
    cfg = _config(args)
    rows = bench_rows(
        args.n, args.t, args.c, args.density, args.seed, args.solver, cfg, args.repeat,
        log=lambda msg: print(msg, file=sys.stderr),
    )
    if args.format == "json":
        _emit(json.dumps(rows, indent=1) + "\n", args.output)
        return EXIT_OK
    buf = io.StringIO()
    buf.write(f"# density={args.density} seed={args.seed} solver={args.solver} omega={cfg.omega} growth={cfg.growth}\n")
    w = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="apspaf", description="Shortest paths for all flows.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a seeded random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--t", type=int, default=None, help="exact number of distinct capacities")
    p.add_argument("--c", type=int, default=1, help="maximum edge cost")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="compute all frontiers of a graph")
    p.add_argument("graph")
    _add_solver_flags(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a frontier against the per-flow oracle")
    p.add_argument("graph")
    p.add_argument("frontier")
    p.add_argument("--no-paths", action="store_true", help="skip path reconstruction checks")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("query", help="shortest path for one flow demand")
    p.add_argument("frontier")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("demand", type=float)
    p.add_argument("--graph", required=True, help="graph the frontier was solved on")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("extract", help="bottleneck tables from a frontier")
    p.add_argument("frontier")
    p.add_argument("--kind", choices=["apbp", "apbsp"], required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("bench", help="time a solver against the per-flow baseline")
    p.add_argument("--n", type=_ints, default=[16, 32, 64])
    p.add_argument("--t", type=_ints, default=[1, 8, 64])
    p.add_argument("--c", type=_ints, default=[1])
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1)
    _add_solver_flags(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CliError, GraphError, FrontierError, ValueError) as exc:
        inputs = [getattr(args, k) for k in ("graph", "frontier") if getattr(args, k, None)]
        where = f" [{', '.join(inputs)}]" if inputs else ""
        print(f"apspaf {args.command}{where}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
