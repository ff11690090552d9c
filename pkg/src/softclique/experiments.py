"""Synthetic benchmark protocol: mixture point clouds, quantile edge sets,
Jaccard scoring, and the table harness comparing the solvers against the
averaged-affinity baseline.

Point clouds are drawn with numpy's default_rng (PCG64), so a given seed
reproduces the identical stream on every platform.  All published numbers
are reconstructible from (dataset, base_seed, q, eta) alone.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from .baseline import averaged_affinity, best_mode
from .kernels import median_width, pairwise_sq_dists, rbf_similarity, total_similarity
from .soft_clique import PenaltyConfig, solve_hard, solve_l1, solve_l2
from .temporal_graph import TemporalGraph, selected_indices

# Noise variance applied to the initial points at each later slice.
# The slice count is one more than the schedule length.
DATASET_NOISE = {
    "A": (10.0, 0.8),
    "B": (10.0, 10.0),
    "C": (10.0, 2.0, 5.0, 0.8),
    "D": (10.0, 2.0, 5.0, 0.8, 2.5, 0.5),
}

# (count, mean, variance) per mixture component; the first component is the
# tight cluster the benchmark wants recovered.
MIXTURE = (
    (7, (0.0, 0.0), 1.0),
    (6, (-6.0, 3.0), 2.0),
    (5, (8.0, -3.0), 2.0),
)

N_POINTS = sum(c for c, _, _ in MIXTURE)
TRUTH_SIZE = MIXTURE[0][0]

DEFAULT_QUANTILE = 0.3

METHODS = ("l1", "l2", "baseline", "hard")


@dataclass(frozen=True)
class SyntheticSpec:
    dataset: str
    seed: int

    def __post_init__(self):
        if self.dataset not in DATASET_NOISE:
            raise ValueError(f"unknown dataset {self.dataset!r}; expected one of A, B, C, D")


@dataclass(frozen=True)
class GroundTruth:
    clique: frozenset

    def __post_init__(self):
        if len(self.clique) == 0:
            raise ValueError("ground truth clique must be nonempty")


@dataclass(frozen=True)
class BenchmarkRow:
    """Aggregate for one (dataset, method) cell."""

    dataset: str
    method: str
    repeats: int
    q: float
    eta: float
    jaccard_mean: float
    jaccard_std: float
    runtime_mean_s: float
    std_degenerate: bool  # repeats == 1: std is 0 by convention, not evidence


@dataclass(frozen=True)
class RunRecord:
    dataset: str
    method: str
    repeat: int
    seed: int
    selected: tuple
    jaccard: float
    runtime_s: float


@dataclass(frozen=True)
class BenchmarkReport:
    rows: tuple
    runs: tuple


def gen_synthetic(spec: SyntheticSpec):
    """Sample the point-cloud series and its ground truth.

    Slice 0 draws the three mixture components in order; every later slice
    is the slice-0 configuration plus fresh zero-mean Gaussian noise with
    the dataset's per-slice variance.  Noise perturbs the initial points,
    it does not accumulate slice over slice.  Returns an array of shape
    (T, 18, 2) and the truth (the tight 7-point component, indices 0..6).
    """
    rng = np.random.default_rng(spec.seed)
    parts = []
    for count, mean, var in MIXTURE:
        parts.append(rng.normal(loc=mean, scale=np.sqrt(var), size=(count, 2)))
    base = np.vstack(parts)
    slices = [base]
    for var in DATASET_NOISE[spec.dataset]:
        noise = rng.normal(loc=0.0, scale=np.sqrt(var), size=base.shape)
        slices.append(base + noise)
    points = np.stack(slices)
    return points, GroundTruth(clique=frozenset(range(TRUTH_SIZE)))


def build_edge_sets(points, q: float = DEFAULT_QUANTILE) -> TemporalGraph:
    """Threshold each slice's pairwise distances at their q-quantile.

    tau_t is the linearly interpolated q-quantile of the unsquared
    Euclidean distances within slice t; (i, j) is an edge iff its distance
    is <= tau_t.  So q=1 gives complete slices and q=0 keeps only the
    minimum-distance pair (plus exact ties).
    """
    if not 0.0 <= q <= 1.0:
        raise ValueError("quantile q must lie in [0, 1]")
    points = np.asarray(points, dtype=float)
    if points.ndim != 3:
        raise ValueError("points must have shape (T, n, dim)")
    n = points.shape[1]
    iu, ju = np.triu_indices(n, k=1)
    edge_lists = []
    for t in range(points.shape[0]):
        dists = np.sqrt(pairwise_sq_dists(points[t])[iu, ju])
        tau = np.quantile(dists, q)
        keep = dists <= tau
        edge_lists.append(
            [(int(i), int(j)) for i, j, k in zip(iu, ju, keep) if k]
        )
    return TemporalGraph.from_edge_lists(n, edge_lists)


def jaccard(truth, predicted) -> float:
    """|X ∩ X̂| / |X ∪ X̂|.  Undefined (error) when both sets are empty."""
    a = {int(v) for v in truth}
    b = {int(v) for v in predicted}
    if not a and not b:
        raise ValueError("jaccard undefined for two empty sets")
    return len(a & b) / len(a | b)


def _pipeline(dataset: str, seed: int, q: float):
    """Everything the methods share for one repeat: per-slice RBF kernels
    (median width each), their sum, the thresholded graph, the averaged
    affinity, and the truth."""
    points, truth = gen_synthetic(SyntheticSpec(dataset, seed))
    per_slice = [
        rbf_similarity(points[t], median_width(points[t]))
        for t in range(points.shape[0])
    ]
    K = total_similarity(per_slice)
    g = build_edge_sets(points, q)
    avg = averaged_affinity(per_slice)
    return truth, K, g, avg


def _run_method(method: str, K, g, avg, eta: float, exact_limit: int):
    if method == "l1":
        sol = solve_l1(g, K, PenaltyConfig(eta=eta, norm_order="l1"), exact_limit=exact_limit)
        return selected_indices(sol.x)
    if method == "l2":
        sol, _ = solve_l2(g, K, PenaltyConfig(eta=eta, norm_order="l2"), exact_limit=exact_limit)
        return selected_indices(sol.x)
    if method == "hard":
        sol = solve_hard(g, K, exact_limit=exact_limit)
        return selected_indices(sol.x)
    if method == "baseline":
        res = best_mode(avg)
        return selected_indices(res.x)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def run_benchmark(
    datasets,
    methods,
    repeats: int,
    q: float = DEFAULT_QUANTILE,
    eta: float = 1.0,
    base_seed: int = 0,
    timing: bool = False,
    exact_limit: int = 20,
) -> BenchmarkReport:
    """Jaccard table over (dataset, method) cells.

    Repeat r uses seed base_seed + r, so runs are reproducible and
    independent of execution order.  Runtimes are recorded only when
    timing=True; the default writes 0.0 placeholders so that regenerated
    outputs stay byte-identical.
    """
    datasets = list(datasets)
    methods = list(methods)
    for ds in datasets:
        if ds not in DATASET_NOISE:
            raise ValueError(f"unknown dataset {ds!r}; expected one of A, B, C, D")
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}; expected one of {', '.join(METHODS)}")
    if repeats < 1:
        raise ValueError("repeats must be at least 1")

    rows = []
    runs = []
    for ds in datasets:
        shared = []
        for r in range(repeats):
            seed = base_seed + r
            shared.append((seed, _pipeline(ds, seed, q)))
        for method in methods:
            jacs = []
            times = []
            for r, (seed, (truth, K, g, avg)) in enumerate(shared):
                t0 = time.perf_counter()
                selected = _run_method(method, K, g, avg, eta, exact_limit)
                elapsed = time.perf_counter() - t0 if timing else 0.0
                score = jaccard(truth.clique, selected)
                jacs.append(score)
                times.append(elapsed)
                runs.append(
                    RunRecord(
                        dataset=ds,
                        method=method,
                        repeat=r,
                        seed=seed,
                        selected=tuple(selected),
                        jaccard=score,
                        runtime_s=elapsed,
                    )
                )
            mean = float(np.mean(jacs))
            if repeats > 1:
                std = float(np.std(jacs, ddof=1))
                degenerate = False
            else:
                std = 0.0
                degenerate = True
            rows.append(
                BenchmarkRow(
                    dataset=ds,
                    method=method,
                    repeats=repeats,
                    q=q,
                    eta=eta,
                    jaccard_mean=mean,
                    jaccard_std=std,
                    runtime_mean_s=float(np.mean(times)),
                    std_degenerate=degenerate,
                )
            )
    return BenchmarkReport(rows=tuple(rows), runs=tuple(runs))


CSV_HEADER = "dataset,method,repeats,q,eta,jaccard_mean,jaccard_std,runtime_mean_s"


def _sig6(x: float) -> str:
    return "{:.6g}".format(float(x))


def write_benchmark_csv(path, report: BenchmarkReport) -> None:
    """One row per (dataset, method); floats at 6 significant digits.

    jaccard_std is the sample (n-1) standard deviation.
    """
    lines = [CSV_HEADER]
    for row in report.rows:
        lines.append(
            ",".join(
                [
                    row.dataset,
                    row.method,
                    str(row.repeats),
                    _sig6(row.q),
                    _sig6(row.eta),
                    _sig6(row.jaccard_mean),
                    _sig6(row.jaccard_std),
                    _sig6(row.runtime_mean_s),
                ]
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_benchmark_jsonl(path, report: BenchmarkReport) -> None:
    """Per-run detail, one JSON object per line, keys sorted."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for run in report.runs:
            fh.write(
                json.dumps(
                    {
                        "dataset": run.dataset,
                        "method": run.method,
                        "repeat": run.repeat,
                        "seed": run.seed,
                        "selected": list(run.selected),
                        "jaccard": run.jaccard,
                        "runtime_s": run.runtime_s,
                    },
                    sort_keys=True,
                )
                + "\n"
            )
