"""Command-line front end: ``colortri <subcommand> ...``.

Graph arguments are an edge-list path (``.gz`` accepted) or a generator
spec: ``gen:disjoint-triangles:K``, ``gen:gnp:N:P:SEED`` (``P`` like ``1/2``),
``gen:chung-lu:N:M:GAMMA:SEED``.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .control import EstimatorConfig, adaptive_estimate, sufficient_p_chernoff, sufficient_p_second_moment
from .errors import ContractError, GraphParseError, NoTrianglesError
from .exact import count_triangles_exact, triangle_stats
from .experiments import compare_samplers, run_report
from .generators import generate_chung_lu, generate_disjoint_triangles, generate_gnp
from .graph import Graph, format_kv, read_edge_list, to_edge_list_text
from .mapreduce import run_pipeline


def load_graph(spec: str) -> Graph:
    if not spec.startswith("gen:"):
        return read_edge_list(spec)
    kind, *args = spec[4:].split(":")
    try:
        if kind == "disjoint-triangles":
            (k,) = args
            return generate_disjoint_triangles(int(k))
        if kind == "gnp":
            n, p, seed = args
            f = Fraction(p)
            return generate_gnp(int(n), f.numerator, f.denominator, int(seed))
        if kind == "chung-lu":
            n, m, gamma, seed = args
            return generate_chung_lu(int(n), int(m), float(gamma), int(seed))
    except ValueError as exc:
        raise ContractError(f"bad generator spec {spec!r}: {exc}") from None
    raise ContractError(f"unknown generator spec {spec!r}")


def _colors(args) -> int:
    if args.colors is not None and args.p is not None:
        raise ContractError("give --colors or --p, not both")
    if args.p is not None:
        p = Fraction(args.p)
        if p.numerator != 1 or p.denominator < 1:
            raise ContractError(f"--p must be 1/N for an integer N, got {args.p}")
        return p.denominator
    if args.colors is None:
        raise ContractError("one of --colors/--p is required")
    return args.colors


def _emit(items, kv: bool, out) -> None:
    items = list(items.items() if isinstance(items, dict) else items)
    if kv:
        out.write(format_kv(items))
    else:
        width = max(len(str(k)) for k, _ in items)
        out.write("".join(f"{k:<{width}}  {v}\n" for k, v in items))


def cmd_stats(args, out):
    g = load_graph(args.graph)
    s = triangle_stats(g)
    name = args.name or args.graph
    if args.kv:
        _emit([("name", name), ("n", g.n), ("m", g.m), ("max_degree", g.max_degree), *s.row().items()], True, out)
        return
    header = ["Name", "Nodes", "Edges", "Triangles", "Delta", "t_max", "sum_delta_sq", "3*Delta*t"]
    row = [name, g.n, g.m, s.t, s.Delta, s.t_max, s.sum_delta_sq, s.bound_3_Delta_t]
    widths = [max(len(str(h)), len(f"{v:,}" if isinstance(v, int) else str(v))) for h, v in zip(header, row)]
    out.write("  ".join(f"{h:>{w}}" for h, w in zip(header, widths)) + "\n")
    out.write("  ".join((f"{v:>{w},}" if isinstance(v, int) else f"{v:>{w}}") for v, w in zip(row, widths)) + "\n")


def cmd_exact(args, out):
    g = load_graph(args.graph)
    rep = run_report(g, "exact", graph_id=args.graph)
    _emit([("n", g.n), ("m", g.m), ("t", rep.exact_t), ("work_ops", rep.exact_work_ops)], args.kv, out)


def cmd_estimate(args, out):
    g = load_graph(args.graph)
    N = _colors(args)
    rep = run_report(g, "estimate", EstimatorConfig(epsilon=args.epsilon), args.seed, N=N, trials=args.reps,
                     compute_exact=args.exact, graph_id=args.graph, workers=args.workers)
    from .rng import derive_seed

    for i, (scaled, raw) in enumerate(zip(rep.estimates, rep.raw_counts)):
        out.write(f"run={i} seed={derive_seed(args.seed, i)} raw_T={raw} scaled={scaled}\n")
    _emit(rep.kv_lines(args.timing), args.kv, out)


def cmd_auto(args, out):
    g = load_graph(args.graph)
    cfg = EstimatorConfig(epsilon=args.epsilon, d=args.d, repetitions=args.reps, tau=args.tau, N_max=args.nmax)
    res = adaptive_estimate(g, cfg, args.seed, workers=args.workers)
    for step, (N, raw) in enumerate(res.trace):
        out.write(f"probe={step} N={N} raw_T={raw}\n")
    for r, e in enumerate(res.final_estimates):
        out.write(f"final={r} N={e.N} raw_T={e.raw_T} scaled={e.scaled}\n")
    items = [("N", res.N), ("estimate", res.estimate)]
    if args.exact:
        t = count_triangles_exact(g).t
        items += [("exact_t", t), ("rel_err", f"{abs(res.estimate - t) / t:.6g}" if t else "NA")]
    _emit(items, args.kv, out)


def cmd_plan(args, out):
    if args.graph is not None:
        g = load_graph(args.graph)
        s = triangle_stats(g)
        n, t, Delta, t_max = g.n, s.t, s.Delta, s.t_max
    else:
        if None in (args.n, args.t, args.delta, args.tmax):
            raise ContractError("plan needs a graph or all of --n --t --delta --tmax")
        n, t, Delta, t_max = args.n, args.t, args.delta, args.tmax
    items = [("n", n), ("t", t), ("Delta", Delta), ("t_max", t_max)]
    try:
        sm = sufficient_p_second_moment(t, Delta, n)
        ch = sufficient_p_chernoff(t, t_max, n, args.epsilon, args.d)
    except NoTrianglesError as exc:
        items.append(("status", str(exc)))
    else:
        items += [
            ("second_moment_p", f"{sm.p:.6g}"),
            ("second_moment_N", sm.N),
            ("chernoff_epsilon", args.epsilon),
            ("chernoff_d", args.d),
            ("chernoff_p", f"{ch.p:.6g}"),
            ("chernoff_N", ch.N),
        ]
    _emit(items, args.kv, out)


def cmd_pipeline(args, out):
    g = load_graph(args.graph)
    est, met = run_pipeline(g, args.colors, args.seed, args.mappers)
    _emit([("N", est.N), ("seed", est.seed), ("raw_T", est.raw_T), ("scaled", est.scaled)], args.kv, out)
    if args.kv:
        out.write(format_kv(met.kv_lines()))
        return
    out.write(f"{'color':>6}  {'load':>8}  {'triangles':>9}\n")
    for c in sorted(met.per_color):
        out.write(f"{c:>6}  {met.per_color[c]:>8}  {met.reducer_triangles[c]:>9}\n")
    out.write(f"emitted_total={met.emitted_total} max_reducer_load={met.max_reducer_load} rounds={met.rounds}\n")


def cmd_compare(args, out):
    g = load_graph(args.graph)
    N = _colors(args)
    col, ind = compare_samplers(g, N, args.trials, args.seed, graph_id=args.graph,
                                epsilon=args.epsilon, workers=args.workers)
    for rep in (col, ind):
        _emit(rep.kv_lines(args.timing), args.kv, out)
        if not args.kv:
            out.write("\n")


def cmd_gen(args, out):
    if args.kind == "disjoint-triangles":
        if len(args.params) != 1:
            raise ContractError("gen disjoint-triangles K")
        g = generate_disjoint_triangles(int(args.params[0]))
    elif args.kind == "gnp":
        if len(args.params) != 3:
            raise ContractError("gen gnp N P SEED")
        f = Fraction(args.params[1])
        g = generate_gnp(int(args.params[0]), f.numerator, f.denominator, int(args.params[2]))
    else:
        if len(args.params) != 4:
            raise ContractError("gen chung-lu N M GAMMA SEED")
        n, m, gamma, seed = args.params
        g = generate_chung_lu(int(n), int(m), float(gamma), int(seed))
    out.write(to_edge_list_text(g))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="colortri", description="Triangle counting by colorful sampling.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="edge-list path or gen:... spec")
        p.add_argument("--kv", action="store_true", help="key=value output, one metric per line")
        p.set_defaults(fn=fn)
        return p

    def color_flags(p):
        p.add_argument("--colors", "-N", type=int)
        p.add_argument("--p", help="sampling rate as 1/N")

    p = graph_cmd("stats", cmd_stats, "exact triangle statistics as a table row")
    p.add_argument("--name")
    graph_cmd("exact", cmd_exact, "exact triangle count")

    p = graph_cmd("estimate", cmd_estimate, "colorful sampling estimates")
    color_flags(p)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--no-exact", dest="exact", action="store_false", help="skip the exact reference count")
    p.add_argument("--timing", action="store_true", help="include wall-clock times")
    p.add_argument("--workers", type=int, default=1)

    p = graph_cmd("auto", cmd_auto, "adaptive color count with median boosting")
    p.add_argument("--epsilon", type=float, default=0.25)
    p.add_argument("--d", type=float, default=1.0)
    p.add_argument("--tau", type=int, default=32)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true", help="also report the exact count")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("plan", help="sufficient sampling rates from graph statistics")
    p.add_argument("graph", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--tmax", type=int)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--d", type=float, default=1.0)
    p.add_argument("--kv", action="store_true")
    p.set_defaults(fn=cmd_plan)

    p = graph_cmd("pipeline", cmd_pipeline, "simulated map/shuffle/reduce run")
    p.add_argument("--colors", "-N", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mappers", type=int, default=1)

    p = graph_cmd("compare", cmd_compare, "colorful vs independent edge sampling")
    color_flags(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("gen", help="write a synthetic graph as an edge list")
    p.add_argument("kind", choices=["disjoint-triangles", "gnp", "chung-lu"])
    p.add_argument("params", nargs="*")
    p.set_defaults(fn=cmd_gen)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.fn(args, out)
    except (GraphParseError, ContractError, OSError) as exc:
        print(f"colortri: error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ContractError) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
