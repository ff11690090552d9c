"""Command-line front end.

Subcommands: gen, kernel, solve, baseline, bench, eval.  Exit code 0 on
success, 1 on a domain error (the underlying module's message goes to
stderr), 2 on a usage error (argparse).  Given identical flags and inputs,
every command writes byte-identical files.
"""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys

from .baseline import DEFAULT_MAX_STEPS, DEFAULT_TOL, averaged_affinity, best_mode, save_baseline
from .experiments import (
    DEFAULT_QUANTILE,
    SyntheticSpec,
    build_edge_sets,
    gen_synthetic,
    jaccard,
    run_benchmark,
    write_benchmark_csv,
    write_benchmark_jsonl,
)
from .kernels import (
    load_matrix,
    load_points_csv,
    median_width,
    rbf_similarity,
    save_matrix,
    save_points_csv,
    subpoly_transform,
    total_similarity,
)
from .soft_clique import (
    PenaltyConfig,
    load_solution,
    save_solution,
    solve_hard,
    solve_l1,
    solve_l2,
)
from .temporal_graph import load_temporal_graph, save_temporal_graph, selected_indices


def cmd_gen(args) -> int:
    points, truth = gen_synthetic(SyntheticSpec(args.dataset, args.seed))
    save_points_csv(points, args.out)
    with open(args.truth, "w", encoding="utf-8") as fh:
        json.dump({"clique": sorted(truth.clique)}, fh, indent=2)
        fh.write("\n")
    if args.graph is not None:
        save_temporal_graph(build_edge_sets(points, args.q), args.graph)
    print(f"wrote {points.shape[0]} slices x {points.shape[1]} points to {args.out}")
    return 0


def cmd_kernel(args) -> int:
    points = load_points_csv(args.points)
    T = points.shape[0]
    if args.global_width:
        pooled = points.reshape(-1, points.shape[2])
        widths = [median_width(pooled)] * T
    else:
        widths = [median_width(points[t]) for t in range(T)]
    per_slice = [rbf_similarity(points[t], widths[t]) for t in range(T)]
    K = total_similarity(per_slice)
    if args.subpoly is not None:
        K = subpoly_transform(K, args.subpoly)
    save_matrix(K, args.out)
    if args.slices_out is not None:
        os.makedirs(args.slices_out, exist_ok=True)
        for t in range(T):
            save_matrix(per_slice[t], os.path.join(args.slices_out, f"slice_{t:03d}.json"))
    print(f"wrote {K.shape[0]}x{K.shape[0]} similarity to {args.out}")
    return 0


def cmd_solve(args) -> int:
    g = load_temporal_graph(args.graph)
    K = load_matrix(args.similarity)
    state = None
    if args.method == "l1":
        cfg = PenaltyConfig(eta=args.eta, norm_order="l1")
        sol = solve_l1(g, K, cfg, exact_limit=args.exact_limit, seed=args.seed)
    elif args.method == "l2":
        cfg = PenaltyConfig(eta=args.eta, norm_order="l2", max_iterations=args.iters)
        sol, state = solve_l2(g, K, cfg, exact_limit=args.exact_limit, seed=args.seed)
    else:
        sol = solve_hard(g, K, exact_limit=args.exact_limit, seed=args.seed)
    save_solution(sol, args.out, state)
    print(
        f"{sol.method}: selected {selected_indices(sol.x)} "
        f"objective {sol.objective!r} ({sol.certificate})"
    )
    return 0


def cmd_baseline(args) -> int:
    files = sorted(glob.glob(os.path.join(args.similarity_slices, "*.json")))
    if not files:
        raise ValueError(f"no .json similarity matrices found in {args.similarity_slices}")
    mats = [load_matrix(f) for f in files]
    avg = averaged_affinity(mats)
    res = best_mode(avg, tol=args.tol, max_steps=args.max_steps)
    save_baseline(res, args.out, tol=args.tol, max_steps=args.max_steps)
    print(
        f"baseline: selected {selected_indices(res.x)} "
        f"score {res.score!r} (start {res.start_vertex})"
    )
    return 0


def cmd_bench(args) -> int:
    datasets = [s for s in args.datasets.split(",") if s]
    methods = [s for s in args.methods.split(",") if s]
    report = run_benchmark(
        datasets,
        methods,
        repeats=args.repeats,
        q=args.q,
        eta=args.eta,
        base_seed=args.seed,
        timing=args.timing,
        exact_limit=args.exact_limit,
    )
    write_benchmark_csv(args.out, report)
    jsonl = os.path.splitext(args.out)[0] + ".jsonl"
    write_benchmark_jsonl(jsonl, report)
    for row in report.rows:
        note = " (std degenerate: single repeat)" if row.std_degenerate else ""
        print(
            f"{row.dataset} {row.method}: jaccard "
            f"{row.jaccard_mean:.4f} +/- {row.jaccard_std:.4f}{note}"
        )
    print(f"wrote {args.out} and {jsonl}")
    return 0


def cmd_eval(args) -> int:
    with open(args.truth, "r", encoding="utf-8") as fh:
        truth = json.load(fh)
    if not isinstance(truth, dict) or "clique" not in truth:
        raise ValueError("truth file must be a JSON object with a 'clique' field")
    sol = load_solution(args.solution)
    print(jaccard(truth["clique"], sol["selected"]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog="softclique",
        description="Persistent soft cliques across sampled graph instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", formatter_class=fmt, help="sample a synthetic benchmark instance")
    p.add_argument("--dataset", required=True, choices=["A", "B", "C", "D"])
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--out", required=True, help="points CSV to write")
    p.add_argument("--truth", required=True, help="ground-truth JSON to write")
    p.add_argument("--graph", default=None, help="optional temporal-graph JSON to write")
    p.add_argument("--q", type=float, default=DEFAULT_QUANTILE,
                   help="distance quantile for --graph edges")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("kernel", formatter_class=fmt,
                       help="RBF similarity from a points CSV (median-heuristic width)")
    p.add_argument("--points", required=True, help="points CSV to read")
    p.add_argument("--out", required=True, help="total-similarity JSON to write")
    p.add_argument("--subpoly", type=float, default=None, metavar="P",
                   help="apply the sub-polynomial transform with this exponent to the output")
    p.add_argument("--global-width", action="store_true",
                   help="one median width from all slices pooled, instead of per slice")
    p.add_argument("--slices-out", default=None, metavar="DIR",
                   help="also write each slice's similarity as DIR/slice_XXX.json")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("solve", formatter_class=fmt, help="run a soft- or hard-clique solver")
    p.add_argument("--graph", required=True, help="temporal-graph JSON")
    p.add_argument("--similarity", required=True, help="similarity-matrix JSON")
    p.add_argument("--method", required=True, choices=["l1", "l2", "hard"])
    p.add_argument("--eta", type=float, default=1.0, help="penalty trade-off")
    p.add_argument("--iters", type=int, default=20, help="l2 iteration budget")
    p.add_argument("--exact-limit", type=int, default=20,
                   help="largest n solved exactly; larger instances use local search")
    p.add_argument("--seed", type=int, default=0, help="seed for local-search restarts")
    p.add_argument("--out", required=True, help="solution JSON to write")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("baseline", formatter_class=fmt,
                       help="dominant-set mode seeking on averaged affinities")
    p.add_argument("--similarity-slices", required=True, metavar="DIR",
                   help="directory of per-slice similarity JSONs")
    p.add_argument("--out", required=True, help="result JSON to write")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="convergence tolerance")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                   help="replicator iteration cap")
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("bench", formatter_class=fmt, help="run the synthetic benchmark table")
    p.add_argument("--datasets", default="A,B,C,D", help="comma-separated dataset names")
    p.add_argument("--methods", default="l1,l2,baseline", help="comma-separated methods")
    p.add_argument("--repeats", type=int, default=10, help="repeats per cell")
    p.add_argument("--q", type=float, default=DEFAULT_QUANTILE, help="edge distance quantile")
    p.add_argument("--eta", type=float, default=1.0, help="penalty trade-off")
    p.add_argument("--seed", type=int, default=0, help="base seed; repeat r uses seed+r")
    p.add_argument("--exact-limit", type=int, default=20,
                   help="largest n solved exactly; larger instances use local search")
    p.add_argument("--timing", action="store_true",
                   help="record wall-clock runtimes (output is then not byte-reproducible)")
    p.add_argument("--out", required=True, help="summary CSV to write (JSONL written alongside)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("eval", formatter_class=fmt, help="Jaccard of a solution against a truth file")
    p.add_argument("--truth", required=True, help="truth JSON with a 'clique' field")
    p.add_argument("--solution", required=True, help="solution JSON")
    p.set_defaults(func=cmd_eval)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
