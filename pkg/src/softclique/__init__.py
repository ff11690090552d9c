"""Persistent soft cliques across sampled graph instances.

A vertex set can be a strong clique in spirit even when no single sampled
edge set contains it completely.  This package scores such sets by total
similarity minus a penalty on the edges missing per sample, and solves the
resulting binary quadratic problems exactly at small scale or with a
deterministic local search beyond that.
"""

from .baseline import BaselineResult, averaged_affinity, best_mode, dominant_set
from .bqp import BqpSolution, bqp_objective, solve, solve_exact, solve_local
from .cliqueness import is_persistent_clique, missing_counts, slack_per_slice
from .experiments import (
    BenchmarkReport,
    GroundTruth,
    SyntheticSpec,
    build_edge_sets,
    gen_synthetic,
    jaccard,
    run_benchmark,
    write_benchmark_csv,
    write_benchmark_jsonl,
)
from .kernels import (
    median_width,
    rbf_similarity,
    set_kernel,
    subpoly_transform,
    total_similarity,
)
from .soft_clique import (
    L2State,
    PenaltyConfig,
    SoftCliqueSolution,
    build_l1_problem,
    lagrangian_value,
    solve_hard,
    solve_l1,
    solve_l2,
)
from .temporal_graph import (
    TemporalGraph,
    intersection_edges,
    load_temporal_graph,
    save_temporal_graph,
    selected_indices,
)

__all__ = [
    "BaselineResult",
    "BenchmarkReport",
    "BqpSolution",
    "GroundTruth",
    "L2State",
    "PenaltyConfig",
    "SoftCliqueSolution",
    "SyntheticSpec",
    "TemporalGraph",
    "averaged_affinity",
    "best_mode",
    "bqp_objective",
    "build_edge_sets",
    "build_l1_problem",
    "dominant_set",
    "gen_synthetic",
    "intersection_edges",
    "is_persistent_clique",
    "jaccard",
    "lagrangian_value",
    "load_temporal_graph",
    "median_width",
    "missing_counts",
    "rbf_similarity",
    "run_benchmark",
    "save_temporal_graph",
    "selected_indices",
    "set_kernel",
    "slack_per_slice",
    "solve",
    "solve_exact",
    "solve_hard",
    "solve_l1",
    "solve_l2",
    "solve_local",
    "subpoly_transform",
    "total_similarity",
    "write_benchmark_csv",
    "write_benchmark_jsonl",
]

__version__ = "0.1.0"
