"""Vertex set observed across T edge-set samples ("slices").

Edges are undirected, unweighted and stored canonically as pairs (i, j)
with i < j.  All similarity weights live in a separate matrix (see
:mod:`softclique.kernels`); a slice only records which pairs were seen
connected.  Vertex identity is positional: index i refers to the same
vertex in every slice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

Edge = tuple[int, int]


def canonical_edges(edges, n: int) -> frozenset[Edge]:
    """Validate an iterable of vertex pairs and return it in canonical form.

    Reversed duplicates collapse onto one (i, j) pair with i < j.
    Raises ValueError on self-loops or endpoints outside [0, n).
    """
    pairs = set()
    for e in edges:
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise ValueError(f"self-loop ({i},{j}) not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge endpoint out of range [0,{n}): ({i},{j})")
        pairs.add((i, j) if i < j else (j, i))
    return frozenset(pairs)


@dataclass(frozen=True)
class TemporalGraph:
    """n vertices with T observed edge sets, immutable after construction."""

    n: int
    slices: tuple[frozenset[Edge], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count n must be >= 1")
        if len(self.slices) < 1:
            raise ValueError("slice count T must be >= 1")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length must equal n")

    @property
    def T(self) -> int:
        return len(self.slices)

    @classmethod
    def from_edge_lists(cls, n, edge_lists, labels=None) -> "TemporalGraph":
        """Build a graph from per-slice edge lists, canonicalizing each slice."""
        slices = tuple(canonical_edges(edges, n) for edges in edge_lists)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
        return cls(n=int(n), slices=slices, labels=labels)


def load_temporal_graph(source) -> TemporalGraph:
    """Load a temporal graph from a parsed JSON document or a file path.

    Expected document shape::

        {"n": int, "labels": [str, ...]?, "slices": [{"edges": [[i, j], ...]}, ...]}

    Edge order in the document is irrelevant; duplicate and reversed pairs
    are deduplicated into canonical (i < j) form.
    """
    if not isinstance(source, dict):
        with open(source) as fh:
            source = json.load(fh)
    if not isinstance(source, dict) or "n" not in source or "slices" not in source:
        raise ValueError("temporal graph document needs 'n' and 'slices' fields")
    n = source["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("vertex count n must be a positive integer")
    raw_slices = source["slices"]
    if not isinstance(raw_slices, list) or len(raw_slices) == 0:
        raise ValueError("'slices' must be a nonempty list")
    edge_lists = []
    for k, sl in enumerate(raw_slices):
        if not isinstance(sl, dict) or "edges" not in sl:
            raise ValueError(f"slice {k} must be an object with an 'edges' list")
        edge_lists.append(sl["edges"])
    labels = source.get("labels")
    return TemporalGraph.from_edge_lists(n, edge_lists, labels=labels)


def temporal_graph_to_dict(g: TemporalGraph) -> dict:
    """Serialize to the JSON document shape; edges sorted lexicographically."""
    doc = {
        "n": g.n,
        "slices": [{"edges": [list(e) for e in sorted(sl)]} for sl in g.slices],
    }
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def save_temporal_graph(g: TemporalGraph, path) -> None:
    Path(path).write_text(json.dumps(temporal_graph_to_dict(g), indent=2) + "\n")


def intersection_edges(g: TemporalGraph) -> frozenset[Edge]:
    """Pairs present in every slice: the feasible edges of a persistent hard clique."""
    inter = g.slices[0]
    for sl in g.slices[1:]:
        inter = inter & sl
    return inter


def as_selection(x, n: int) -> np.ndarray:
    """Coerce x to a length-n 0/1 indicator vector, validating both."""
    arr = np.asarray(x)
    if arr.shape != (n,):
        raise ValueError(f"selection length {arr.shape} does not match n={n}")
    arr = arr.astype(np.int64)
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError("selection entries must be 0 or 1")
    return arr


def selection_from_indices(indices, n: int) -> np.ndarray:
    """Indicator vector with ones at the given vertex indices."""
    x = np.zeros(n, dtype=np.int64)
    for i in indices:
        i = int(i)
        if not 0 <= i < n:
            raise ValueError(f"vertex index {i} out of range [0,{n})")
        x[i] = 1
    return x


def selected_indices(x) -> list[int]:
    """Sorted vertex indices with x_i = 1."""
    return [int(i) for i in np.flatnonzero(np.asarray(x))]
