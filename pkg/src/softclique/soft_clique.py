"""Soft-clique solvers.

Three ways to pick a heavy vertex subset out of a stack of sampled edge
sets: an l1-penalized surrogate (one binary quadratic problem), an
l2-penalized surrogate (alternation between a binary quadratic problem and
a closed-form dual update), and the hard variant that forbids any missing
edge outright.  All three reduce to the solvers in :mod:`softclique.bqp`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import bqp
from .cliqueness import missing_counts, slice_missing_matrix, slack_per_slice
from .kernels import validate_similarity
from .temporal_graph import TemporalGraph, intersection_edges, selected_indices


@dataclass(frozen=True)
class PenaltyConfig:
    """Trade-off weight eta, penalty norm, and the l2 iteration budget."""

    eta: float
    norm_order: str = "l1"
    max_iterations: int = 20

    def __post_init__(self):
        if not math.isfinite(self.eta):
            raise ValueError("eta must be finite")
        if self.eta < 0.0:
            raise ValueError("eta must be nonnegative")
        if self.norm_order not in ("l1", "l2"):
            raise ValueError("norm_order must be 'l1' or 'l2'")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


@dataclass(frozen=True)
class SoftCliqueSolution:
    """Selected vertices with their per-slice slack and surrogate objective.

    beta is always recomputed from the selection and the input graph, so it
    is trustworthy independent of which solver produced x.  For the hard
    method beta is all-zero by construction.
    """

    x: np.ndarray
    beta: np.ndarray
    objective: float
    method: str  # "l1", "l2" or "hard"
    certificate: str  # from the BQP backend


@dataclass(frozen=True)
class L2State:
    """Dual variables and per-iteration trace of the l2 alternation.

    history holds one (x, lambdas, objective) triple per completed
    iteration, recorded after the dual update.  The alternation is not
    guaranteed monotone, hence a trace rather than a convergence claim.
    """

    lambdas: np.ndarray
    iterations: int
    history: tuple


def build_l1_problem(K, C, eta: float) -> np.ndarray:
    """Combined weight matrix Q = K - eta*C with the diagonal forced to zero."""
    K = validate_similarity(K)
    C = np.asarray(C)
    if C.shape != K.shape:
        raise ValueError("similarity and count matrices must have the same shape")
    if not math.isfinite(eta) or eta < 0.0:
        raise ValueError("eta must be finite and nonnegative")
    Q = K - eta * C.astype(float)
    np.fill_diagonal(Q, 0.0)
    return Q


def _penalized_problem(K, g: TemporalGraph, lambdas) -> np.ndarray:
    """Q_ij = K_ij - sum_t lambdas[t] * 1[(i,j) missing in slice t]."""
    penalty = np.zeros_like(K)
    for t in range(g.T):
        penalty += lambdas[t] * slice_missing_matrix(g, t).astype(float)
    Q = K - penalty
    np.fill_diagonal(Q, 0.0)
    return Q


def lagrangian_value(g: TemporalGraph, K, x, lambdas, eta: float) -> float:
    """Partial Lagrangian of the l2 relaxation at (x, lambdas):

        -sum_{i<j} x_i x_j K_ij  -  (1/(4 eta)) sum_t lambdas_t^2
        + sum_t lambdas_t * beta_t(x)

    where beta_t(x) counts the selected pairs missing from slice t.
    """
    if eta <= 0.0:
        raise ValueError("eta must be positive for l2")
    kpart = bqp.bqp_objective(K, x)
    beta = slack_per_slice(x, g)
    quad = 0.0
    lin = 0.0
    for t in range(g.T):
        lam = float(lambdas[t])
        quad += lam * lam
        lin += lam * float(beta[t])
    return -kpart - quad / (4.0 * eta) + lin


def solve_l1(
    g: TemporalGraph,
    K,
    cfg: PenaltyConfig,
    exact_limit: int = bqp.DEFAULT_EXACT_LIMIT,
    seed: int = 0,
    extra_restarts: int = 0,
) -> SoftCliqueSolution:
    """One-shot l1 soft clique: maximize sum_{i<j} x_i x_j (K_ij - eta C_ij)
    where C counts, over slices, the missing pairs."""
    if cfg.norm_order != "l1":
        raise ValueError("norm_order must be 'l1' for solve_l1")
    K = validate_similarity(K, g.n)
    Q = build_l1_problem(K, missing_counts(g), cfg.eta)
    sol = bqp.solve(Q, exact_limit=exact_limit, seed=seed, extra_restarts=extra_restarts)
    return SoftCliqueSolution(
        x=sol.x,
        beta=slack_per_slice(sol.x, g),
        objective=sol.objective,
        method="l1",
        certificate=sol.certificate,
    )


def solve_l2(
    g: TemporalGraph,
    K,
    cfg: PenaltyConfig,
    exact_limit: int = bqp.DEFAULT_EXACT_LIMIT,
    seed: int = 0,
    extra_restarts: int = 0,
) -> tuple[SoftCliqueSolution, L2State]:
    """Alternating l2 soft clique.

    Starting from all-zero duals, each iteration solves the weighted
    selection problem with Q_ij = K_ij - sum_t lambdas[t] 1[(i,j) missing
    in t], then sets lambdas[t] = 2 * eta * beta_t(x) in closed form.  Runs
    for cfg.max_iterations iterations, stopping early as soon as the
    selection repeats between consecutive iterations.  The reported
    objective is the partial Lagrangian at the final (x, lambdas).
    """
    if cfg.norm_order != "l2":
        raise ValueError("norm_order must be 'l2' for solve_l2")
    if cfg.eta <= 0.0:
        raise ValueError("eta must be positive for l2")
    K = validate_similarity(K, g.n)

    lambdas = np.zeros(g.T, dtype=float)
    history = []
    prev_x = None
    x = None
    certificate = "exact"
    for _ in range(cfg.max_iterations):
        Q = _penalized_problem(K, g, lambdas)
        sol = bqp.solve(Q, exact_limit=exact_limit, seed=seed, extra_restarts=extra_restarts)
        x = sol.x
        certificate = sol.certificate
        beta = slack_per_slice(x, g)
        lambdas = 2.0 * cfg.eta * beta.astype(float)
        objective = lagrangian_value(g, K, x, lambdas, cfg.eta)
        history.append((x, lambdas.copy(), objective))
        if prev_x is not None and np.array_equal(x, prev_x):
            break
        prev_x = x

    beta = slack_per_slice(x, g)
    solution = SoftCliqueSolution(
        x=x,
        beta=beta,
        objective=history[-1][2],
        method="l2",
        certificate=certificate,
    )
    state = L2State(lambdas=lambdas, iterations=len(history), history=tuple(history))
    return solution, state


def solve_hard(
    g: TemporalGraph,
    K,
    exact_limit: int = bqp.DEFAULT_EXACT_LIMIT,
    seed: int = 0,
    extra_restarts: int = 0,
) -> SoftCliqueSolution:
    """Maximum-weight subset that is a clique in every slice simultaneously.

    Solved as a BQP over the intersection graph: pairs present in all
    slices keep their weight K_ij, every other pair costs M = 1 + sum K_ij,
    which exceeds any achievable gain, so optima never include a missing
    pair (the empty set, at value 0, always beats them).
    """
    K = validate_similarity(K, g.n)
    n = g.n
    inter = intersection_edges(g)
    M = 1.0 + float(sum(K[i, j] for i in range(n) for j in range(i + 1, n)))
    Q = np.zeros((n, n), dtype=float)
    for i in range(n):
        for j in range(i + 1, n):
            q = K[i, j] if (i, j) in inter else -M
            Q[i, j] = q
            Q[j, i] = q
    sol = bqp.solve(Q, exact_limit=exact_limit, seed=seed, extra_restarts=extra_restarts)
    return SoftCliqueSolution(
        x=sol.x,
        beta=slack_per_slice(sol.x, g),
        objective=sol.objective,
        method="hard",
        certificate=sol.certificate,
    )


def solution_to_dict(sol: SoftCliqueSolution, state: L2State | None = None) -> dict:
    """JSON-ready form: method, selected indices, objective, beta,
    optional lambda/iterations (l2 only), certificate."""
    out = {
        "method": sol.method,
        "selected": selected_indices(sol.x),
        "objective": float(sol.objective),
        "beta": [int(b) for b in sol.beta],
    }
    if state is not None:
        out["lambda"] = [float(v) for v in state.lambdas]
        out["iterations"] = int(state.iterations)
    out["certificate"] = sol.certificate
    return out


def save_solution(sol: SoftCliqueSolution, path, state: L2State | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(solution_to_dict(sol, state), fh, indent=2)
        fh.write("\n")


def load_solution(path) -> dict:
    """Read a solution file back as a dict, checking the required fields.

    Accepts both solver solutions and baseline results: only the fields
    shared by every method are mandatory.
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("solution file must hold a JSON object")
    for field in ("method", "selected", "objective"):
        if field not in data:
            raise ValueError(f"solution file missing field '{field}'")
    return data
