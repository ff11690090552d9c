"""Soft clique-ness: per-slice missing-edge counts for a vertex selection.

The measure of how far a selection x is from being a clique in slice t is
the integer count of selected pairs absent from that slice's edge set.
Counts are kept as exact integers; they only become floats inside
objective functions.
"""

from __future__ import annotations

import numpy as np

from .temporal_graph import TemporalGraph, as_selection


def slack_per_slice(x, g: TemporalGraph) -> np.ndarray:
    """Number of selected pairs missing from each slice (length-T int vector).

    Entry t is sum over selected pairs (i, j), i < j, of the indicator that
    (i, j) is not an edge of slice t.  Ranges from 0 (x is a clique in
    slice t) to k(k-1)/2 for k selected vertices (completely disconnected).
    """
    x = as_selection(x, g.n)
    sel = [int(i) for i in np.flatnonzero(x)]
    beta = np.zeros(g.T, dtype=np.int64)
    for t, edges in enumerate(g.slices):
        missing = 0
        for a in range(len(sel)):
            for b in range(a + 1, len(sel)):
                if (sel[a], sel[b]) not in edges:
                    missing += 1
        beta[t] = missing
    return beta


def slice_missing_matrix(g: TemporalGraph, t: int) -> np.ndarray:
    """n x n 0/1 matrix marking pairs absent from slice t; zero diagonal."""
    m = np.ones((g.n, g.n), dtype=np.int64)
    np.fill_diagonal(m, 0)
    for i, j in g.slices[t]:
        m[i, j] = 0
        m[j, i] = 0
    return m


def missing_counts(g: TemporalGraph) -> np.ndarray:
    """Symmetric n x n integer matrix of how many slices lack each pair."""
    counts = np.zeros((g.n, g.n), dtype=np.int64)
    for t in range(g.T):
        counts += slice_missing_matrix(g, t)
    return counts


def is_persistent_clique(x, g: TemporalGraph) -> bool:
    """True iff the selection induces a clique in every slice.

    Equivalently, x is a clique of the intersection graph.  The empty and
    singleton selections are vacuously persistent cliques.
    """
    return not slack_per_slice(x, g).any()
