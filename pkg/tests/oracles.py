"""Independent brute-force references for the solver tests.

Everything here is deliberately naive: plain loops over all 2^n subsets,
with pair sums accumulated in the same fixed order the library documents
(i ascending outer, j ascending inner), so objective comparisons can use
exact float equality.  Masks are scanned with bit 0 as the most
significant position, which makes the first strict maximum automatically
the lexicographically smallest optimum.
"""

import numpy as np


def mask_to_x(mask: int, n: int) -> np.ndarray:
    return np.array([(mask >> (n - 1 - i)) & 1 for i in range(n)], dtype=np.int64)


def pair_sum(rows, sel) -> float:
    total = 0.0
    for a in range(len(sel)):
        ra = rows[sel[a]]
        for b in range(a + 1, len(sel)):
            total += ra[sel[b]]
    return total


def enumerate_best(Q):
    """Best subset of an unconstrained BQP by full enumeration."""
    Q = np.asarray(Q, dtype=float)
    n = Q.shape[0]
    rows = [list(map(float, Q[i])) for i in range(n)]
    best_val = 0.0
    best_mask = 0
    for mask in range(1 << n):
        sel = [i for i in range(n) if (mask >> (n - 1 - i)) & 1]
        val = pair_sum(rows, sel)
        if val > best_val:
            best_val = val
            best_mask = mask
    return best_val, mask_to_x(best_mask, n)


def is_clique_everywhere(sel, slices) -> bool:
    for a in range(len(sel)):
        for b in range(a + 1, len(sel)):
            pair = (sel[a], sel[b])
            for edges in slices:
                if pair not in edges:
                    return False
    return True


def enumerate_best_clique(K, slices, n):
    """Best K-weight subset that is a clique in every slice."""
    K = np.asarray(K, dtype=float)
    rows = [list(map(float, K[i])) for i in range(n)]
    best_val = 0.0
    best_mask = 0
    for mask in range(1 << n):
        sel = [i for i in range(n) if (mask >> (n - 1 - i)) & 1]
        if not is_clique_everywhere(sel, slices):
            continue
        val = pair_sum(rows, sel)
        if val > best_val:
            best_val = val
            best_mask = mask
    return best_val, mask_to_x(best_mask, n)


def count_missing(sel, edges) -> int:
    missing = 0
    for a in range(len(sel)):
        for b in range(a + 1, len(sel)):
            if (sel[a], sel[b]) not in edges:
                missing += 1
    return missing


def random_similarity(rng, n: int) -> np.ndarray:
    """Symmetric zero-diagonal matrix with off-diagonals uniform on [0, 1]."""
    K = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.uniform(0.0, 1.0)
            K[i, j] = v
            K[j, i] = v
    return K


def random_slices(rng, n: int, T: int, low: float = 0.3, high: float = 0.9):
    """Per-slice edge sets; each slice keeps a pair with its own density
    drawn from [low, high].  Edges are canonical (i < j) tuples."""
    slices = []
    for _ in range(T):
        density = rng.uniform(low, high)
        edges = set()
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < density:
                    edges.add((i, j))
        slices.append(frozenset(edges))
    return slices
