"""Binary quadratic maximization: max over x in {0,1}^n of
sum_{i<j} x_i x_j Q_ij for a symmetric, zero-diagonal Q.

Both soft-clique algorithms reduce to this problem.  Two backends are
provided: an exact depth-first branch-and-bound for small n, and a
deterministic multi-start 1-flip local search for larger instances.
Everything is deterministic; ties are broken toward the lexicographically
smallest bit vector (bit 0 most significant) so results are reproducible
bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .temporal_graph import as_selection

DEFAULT_EXACT_LIMIT = 20


def check_bqp_matrix(Q) -> np.ndarray:
    """Validate a BQP weight matrix: square, finite, exactly symmetric, zero diagonal."""
    Q = np.asarray(Q, dtype=float)
    if Q.ndim != 2 or Q.shape[0] != Q.shape[1]:
        raise ValueError("BQP matrix must be square")
    if not np.isfinite(Q).all():
        raise ValueError("BQP matrix entries must be finite")
    if not np.array_equal(Q, Q.T):
        raise ValueError("BQP matrix must be exactly symmetric")
    if np.any(np.diagonal(Q) != 0.0):
        raise ValueError("BQP matrix must have an exactly zero diagonal")
    return Q


@dataclass(frozen=True)
class BqpSolution:
    """A selection, its objective value, and how it was obtained."""

    x: np.ndarray
    objective: float
    certificate: str  # "exact" or "local"


def bqp_objective(Q, x) -> float:
    """Sum of Q_ij over selected pairs i < j, accumulated in fixed index
    order (i outer, j inner).

    Skipping unselected pairs is bit-identical to the full fixed-order sum,
    because adding a zero term never changes an IEEE double accumulator.
    """
    Q = np.asarray(Q, dtype=float)
    n = Q.shape[0]
    x = as_selection(x, n)
    sel = [int(i) for i in np.flatnonzero(x)]
    total = 0.0
    for a in range(len(sel)):
        row = Q[sel[a]]
        for b in range(a + 1, len(sel)):
            total += row[sel[b]]
    return float(total)


def solve_exact(Q, exact_limit: int = DEFAULT_EXACT_LIMIT) -> BqpSolution:
    """Globally optimal selection by depth-first branch and bound.

    Vertices are decided in index order, 0-branch first, so complete
    selections are visited in lexicographic bit-vector order and the first
    strict improvement is automatically the lexicographically smallest
    optimum.  The upper bound at a node is the value of the decided pairs
    plus the sum of positive Q entries over pairs still compatible with the
    partial assignment (chosen x undecided and undecided x undecided).
    When every compatible pair is strictly positive the bound is attained
    by taking all undecided vertices, which closes the subtree early;
    exact integer counts of negative and zero compatible pairs guard that
    shortcut, so tie-breaking is never affected.
    """
    Q = check_bqp_matrix(Q)
    n = Q.shape[0]
    if n > exact_limit:
        raise ValueError(f"exact backend limited to n <= {exact_limit}, got n={n}")
    rows = [row.tolist() for row in Q]

    # per-vertex tail statistics over pairs (v, u) with u > v
    tail_pos = [0.0] * n
    tail_neg_cnt = [0] * n
    tail_zero_cnt = [0] * n
    root_pos = 0.0
    root_neg = 0
    root_zero = 0
    for v in range(n):
        rv = rows[v]
        for u in range(v + 1, n):
            q = rv[u]
            if q > 0.0:
                tail_pos[v] += q
            elif q < 0.0:
                tail_neg_cnt[v] += 1
            else:
                tail_zero_cnt[v] += 1
        root_pos += tail_pos[v]
        root_neg += tail_neg_cnt[v]
        root_zero += tail_zero_cnt[v]

    def eval_subset(sel):
        # same accumulation order as bqp_objective
        total = 0.0
        for a in range(len(sel)):
            ra = rows[sel[a]]
            for b in range(a + 1, len(sel)):
                total += ra[sel[b]]
        return total

    best_val = 0.0
    best_sel: tuple[int, ...] = ()
    chosen: list[int] = []

    def rec(d, cur_val, pos_avail, neg_cnt, zero_cnt):
        nonlocal best_val, best_sel
        if neg_cnt == 0 and zero_cnt == 0:
            # bound attained by taking every undecided vertex; positivity of
            # all compatible pairs makes that completion the unique optimum
            cand = chosen + list(range(d, n))
            val = eval_subset(cand)
            if val > best_val:
                best_val = val
                best_sel = tuple(cand)
            return
        if d == n:
            val = eval_subset(chosen)
            if val > best_val:
                best_val = val
                best_sel = tuple(chosen)
            return
        if cur_val + pos_avail <= best_val:
            return
        v = d
        rv = rows[v]
        drop_pos = 0.0
        drop_neg = 0
        drop_zero = 0
        add_val = 0.0
        for c in chosen:
            q = rv[c]
            add_val += q
            if q > 0.0:
                drop_pos += q
            elif q < 0.0:
                drop_neg += 1
            else:
                drop_zero += 1
        # x_v = 0: pairs (c, v) and (v, u>v) all become unavailable
        rec(
            d + 1,
            cur_val,
            pos_avail - drop_pos - tail_pos[v],
            neg_cnt - drop_neg - tail_neg_cnt[v],
            zero_cnt - drop_zero - tail_zero_cnt[v],
        )
        # x_v = 1: pairs (c, v) are decided; pairs (v, u>v) stay available
        chosen.append(v)
        rec(
            d + 1,
            cur_val + add_val,
            pos_avail - drop_pos,
            neg_cnt - drop_neg,
            zero_cnt - drop_zero,
        )
        chosen.pop()

    rec(0, 0.0, root_pos, root_neg, root_zero)

    x = np.zeros(n, dtype=np.int64)
    for i in best_sel:
        x[i] = 1
    return BqpSolution(x=x, objective=bqp_objective(Q, x), certificate="exact")


def _local_ascent(Q, x):
    """Best-improvement 1-flip ascent from x; ties go to the lowest index."""
    n = Q.shape[0]
    x = x.astype(float)
    s = Q @ x  # partner sums: s_v = sum_u Q_uv x_u (diagonal is zero)
    limit = 100 * n + 100  # never reached in practice; guards float drift
    for _ in range(limit):
        gains = (1.0 - 2.0 * x) * s
        v = int(np.argmax(gains))  # first maximum = lowest index
        if not gains[v] > 0.0:
            break
        if x[v] == 0.0:
            x[v] = 1.0
            s += Q[:, v]
        else:
            x[v] = 0.0
            s -= Q[:, v]
    return x.astype(np.int64)


def solve_local(Q, seed: int = 0, extra_restarts: int = 0) -> BqpSolution:
    """Deterministic multi-start 1-flip local search.

    Starts from the empty vector and from every singleton; extra random
    restarts (seeded) can be added on top.  Returns the best local optimum,
    ties broken toward the lexicographically smallest bit vector.
    """
    Q = check_bqp_matrix(Q)
    n = Q.shape[0]
    starts = [np.zeros(n, dtype=np.int64)]
    for v in range(n):
        s = np.zeros(n, dtype=np.int64)
        s[v] = 1
        starts.append(s)
    if extra_restarts > 0:
        rng = np.random.default_rng(seed)
        for _ in range(extra_restarts):
            starts.append(rng.integers(0, 2, size=n).astype(np.int64))

    best_x = None
    best_val = None
    for s in starts:
        x = _local_ascent(Q, s)
        val = bqp_objective(Q, x)
        if (
            best_val is None
            or val > best_val
            or (val == best_val and tuple(x) < tuple(best_x))
        ):
            best_val = val
            best_x = x
    return BqpSolution(x=best_x, objective=best_val, certificate="local")


def solve(
    Q,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
    seed: int = 0,
    extra_restarts: int = 0,
) -> BqpSolution:
    """Dispatch: exact branch and bound when n <= exact_limit, else local search."""
    Q = check_bqp_matrix(Q)
    if Q.shape[0] <= exact_limit:
        return solve_exact(Q, exact_limit=exact_limit)
    return solve_local(Q, seed=seed, extra_restarts=extra_restarts)
