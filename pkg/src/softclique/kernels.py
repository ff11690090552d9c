"""Similarity matrices: per-slice Gaussian RBF kernels, their total, set
kernels over bags of descriptors, and the sub-polynomial diagonal-dominance
correction.

All constructors build the upper triangle and mirror it, so outputs are
exactly symmetric (bitwise).  Diagonals are stored but never read by the
clique objectives, which sum strictly over i < j.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np


def validate_similarity(K, n: int | None = None) -> np.ndarray:
    """Check that K is a finite, nonnegative, exactly symmetric square matrix."""
    K = np.asarray(K, dtype=float)
    if K.ndim != 2 or K.shape[0] != K.shape[1]:
        raise ValueError("similarity matrix must be square")
    if n is not None and K.shape[0] != n:
        raise ValueError(f"similarity matrix size {K.shape[0]} does not match n={n}")
    if not np.isfinite(K).all():
        raise ValueError("similarity matrix entries must be finite")
    if (K < 0).any():
        raise ValueError("similarity matrix entries must be nonnegative")
    if not np.array_equal(K, K.T):
        raise ValueError("similarity matrix must be exactly symmetric")
    return K


def _mirror_upper(M: np.ndarray) -> np.ndarray:
    """Copy the strict upper triangle onto the lower one."""
    out = np.triu(M)
    out = out + np.triu(M, 1).T
    return out


def pairwise_sq_dists(points) -> np.ndarray:
    """Exactly symmetric matrix of squared Euclidean distances."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2:
        raise ValueError("points must be a 2-D array (n, d)")
    diffs = pts[:, None, :] - pts[None, :, :]
    return np.einsum("ijk,ijk->ij", diffs, diffs)


def median_width(points, squared: bool = True) -> float:
    """Kernel width from the median-distance heuristic.

    With squared=True (the default) this is the median of the squared
    Euclidean distances over distinct pairs, so the RBF exponent is exactly
    -1 at the median pair.  squared=False uses plain distances instead;
    either way the returned value is used directly as the width sigma^2.
    Even pair counts take the mean of the two central values.
    """
    pts = np.asarray(points, dtype=float)
    n = pts.shape[0]
    if n < 2:
        raise ValueError("median width needs at least 2 points")
    d2 = pairwise_sq_dists(pts)
    iu = np.triu_indices(n, k=1)
    vals = d2[iu]
    if not squared:
        vals = np.sqrt(vals)
    width = float(np.median(vals))
    if width == 0.0:
        raise ValueError("median pairwise distance is zero (points coincide)")
    return width


def rbf_similarity(points, width: float) -> np.ndarray:
    """Gaussian RBF matrix exp(-||v_i - v_j||^2 / width); unit diagonal."""
    if not width > 0:
        raise ValueError("kernel width must be positive")
    d2 = pairwise_sq_dists(points)
    return np.exp(-d2 / width)


def total_similarity(per_slice) -> np.ndarray:
    """Elementwise sum of per-slice similarity matrices, in slice order."""
    mats = [np.asarray(m, dtype=float) for m in per_slice]
    if len(mats) == 0:
        raise ValueError("need at least one similarity matrix")
    n = mats[0].shape[0]
    for m in mats:
        if m.shape != (n, n):
            raise ValueError("similarity matrices must share the same size")
    total = mats[0].copy()
    for m in mats[1:]:
        total += m
    return total


def _rbf_value(u, v, width: float) -> float:
    d = u - v
    return float(np.exp(-float(np.dot(d, d)) / width))


def set_kernel(bags, base_width: float) -> np.ndarray:
    """Bag-to-bag similarity: double sum of the Gaussian base kernel over
    all cross pairs of descriptors.  Unnormalized, exactly symmetric.
    """
    if not base_width > 0:
        raise ValueError("kernel width must be positive")
    bags = [np.asarray(b, dtype=float) for b in bags]
    if len(bags) == 0:
        raise ValueError("need at least one bag")
    for k, b in enumerate(bags):
        if b.ndim != 2 or b.shape[0] == 0:
            raise ValueError(f"bag {k} must be a nonempty (m, d) array")
        if b.shape[1] != bags[0].shape[1]:
            raise ValueError("bags must share descriptor dimension")
    n = len(bags)
    K = np.zeros((n, n))
    for a in range(n):
        for b in range(a, n):
            # cross-distance matrix between bag a and bag b
            diffs = bags[a][:, None, :] - bags[b][None, :, :]
            d2 = np.einsum("ijk,ijk->ij", diffs, diffs)
            val = float(np.exp(-d2 / base_width).sum())
            K[a, b] = val
            K[b, a] = val
    return K


def subpoly_transform(K, p: float) -> np.ndarray:
    """Sub-polynomial diagonal-dominance correction.

    Raises every entry to the power p in (0, 1), normalizes each row to unit
    L2 length, and returns the Gram product of the normalized matrix with
    itself.  The output is positive semidefinite with unit diagonal.
    """
    if not 0.0 < p < 1.0:
        raise ValueError("exponent p must lie strictly between 0 and 1")
    K = np.asarray(K, dtype=float)
    if (K < 0).any():
        raise ValueError("kernel entries must be nonnegative")
    Kp = K**p
    norms = np.sqrt((Kp * Kp).sum(axis=1))
    if (norms == 0).any():
        raise ValueError("row normalization undefined: matrix has an all-zero row")
    Khat = Kp / norms[:, None]
    G = Khat @ Khat.T
    return _mirror_upper(G)


# ---------------------------------------------------------------------------
# serialization


def save_matrix(K, path) -> None:
    """Write a matrix as JSON {"n": int, "rows": [[...], ...]} at full precision."""
    K = np.asarray(K, dtype=float)
    doc = {"n": int(K.shape[0]), "rows": [[float(v) for v in row] for row in K]}
    Path(path).write_text(json.dumps(doc) + "\n")


def load_matrix(path_or_doc) -> np.ndarray:
    doc = path_or_doc
    if not isinstance(doc, dict):
        with open(doc) as fh:
            doc = json.load(fh)
    if "n" not in doc or "rows" not in doc:
        raise ValueError("matrix document needs 'n' and 'rows' fields")
    K = np.asarray(doc["rows"], dtype=float)
    if K.shape != (doc["n"], doc["n"]):
        raise ValueError("matrix rows do not match declared size n")
    return K


def save_points_csv(points, path) -> None:
    """Write a point-cloud series (T, n, d) as t,vertex,coord_0..coord_{d-1}."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 3:
        raise ValueError("point-cloud series must have shape (T, n, d)")
    T, n, d = pts.shape
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "vertex"] + [f"coord_{k}" for k in range(d)])
        for t in range(T):
            for v in range(n):
                w.writerow([t, v] + [repr(float(c)) for c in pts[t, v]])


def load_points_csv(path) -> np.ndarray:
    """Read a point-cloud series; every (t, vertex) pair must appear exactly once."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[:2] != ["t", "vertex"]:
            raise ValueError("points CSV must start with columns t,vertex")
        d = len(header) - 2
        if d < 1:
            raise ValueError("points CSV needs at least one coordinate column")
        rows = {}
        for row in reader:
            if not row:
                continue
            t, v = int(row[0]), int(row[1])
            if (t, v) in rows:
                raise ValueError(f"duplicate (t, vertex) pair ({t},{v})")
            rows[(t, v)] = [float(c) for c in row[2:]]
    if not rows:
        raise ValueError("points CSV contains no data rows")
    T = max(t for t, _ in rows) + 1
    n = max(v for _, v in rows) + 1
    pts = np.empty((T, n, d))
    for t in range(T):
        for v in range(n):
            if (t, v) not in rows:
                raise ValueError(f"missing (t, vertex) pair ({t},{v})")
            pts[t, v] = rows[(t, v)]
    return pts


def load_bags_csv(path) -> list[np.ndarray]:
    """Read a bag dataset: one row per descriptor, columns vertex,coord_0,..."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[0] != "vertex":
            raise ValueError("bags CSV must start with a 'vertex' column")
        by_vertex: dict[int, list[list[float]]] = {}
        for row in reader:
            if not row:
                continue
            by_vertex.setdefault(int(row[0]), []).append([float(c) for c in row[1:]])
    if not by_vertex:
        raise ValueError("bags CSV contains no data rows")
    n = max(by_vertex) + 1
    bags = []
    for v in range(n):
        if v not in by_vertex:
            raise ValueError(f"vertex {v} has an empty bag")
        bags.append(np.asarray(by_vertex[v], dtype=float))
    return bags
