"""Community detection and structural role discovery.

Communities come from asynchronous label propagation; roles from recursive
structural features clustered with a deterministic k-means. Both are seeded
and reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.spatial.distance import cdist

from ._kernels import label_propagation_sweep
from .graph import Graph
from .stats import NodeStatsTable

__all__ = [
    "NodeLabeling",
    "detect_communities",
    "propagate_labels",
    "modularity",
    "extract_role_features",
    "discover_roles",
]

MAX_SWEEPS = 100
AUTO_K_RANGE = (2, 8)

_BASE_FEATURES = (
    "degree", "triangles", "local_clustering", "kcore", "mean_nbr_degree", "max_nbr_degree"
)
ROLE_FEATURE_NAMES = (
    _BASE_FEATURES
    + tuple(f"nbr_mean_{f}" for f in _BASE_FEATURES)
    + tuple(f"nbr_sum_{f}" for f in _BASE_FEATURES)
)


@dataclass
class NodeLabeling:
    """A per-node integer labeling with its quality score.

    ``kind`` is "community" (quality = modularity, None when m = 0) or
    "role" (quality = within-cluster share of total feature variance).
    Labels are dense in [0, k) and k counts the distinct labels present.
    """

    kind: str
    labels: np.ndarray
    k: int
    quality: float | None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "labels": [int(x) for x in self.labels],
            "quality": self.quality,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "NodeLabeling":
        return cls(
            kind=d["kind"],
            labels=np.asarray(d["labels"], dtype=np.int64),
            k=int(d["k"]),
            quality=d["quality"],
        )


def _dense_relabel(labels: np.ndarray) -> tuple[np.ndarray, int]:
    """Compress labels to 0..k-1 in order of first appearance."""
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inverse], len(first)


def propagate_labels(g: Graph, orders: list[np.ndarray]) -> np.ndarray:
    """Run label propagation sweeps with explicit node orders.

    Each node starts labeled by its own id; in each sweep nodes are visited
    in the given order and adopt the most frequent label among neighbors
    (ties broken by the smallest label). Stops early at a fixpoint.
    """
    labels = np.arange(g.n, dtype=np.int64)
    for order in orders:
        changed = label_propagation_sweep(
            g.indptr, g.indices, labels, np.asarray(order, dtype=np.int64)
        )
        if changed == 0:
            break
    return labels


def detect_communities(g: Graph, seed: int = 0) -> NodeLabeling:
    """Asynchronous label propagation with seeded sweep orders.

    Deterministic per seed; capped at 100 sweeps. Labels are compressed to
    a dense range ordered by first appearance.
    """
    if g.n == 0:
        raise ValueError("graph has no nodes")
    rng = np.random.Generator(np.random.PCG64(seed))
    labels = np.arange(g.n, dtype=np.int64)
    for _ in range(MAX_SWEEPS):
        order = rng.permutation(g.n).astype(np.int64)
        if label_propagation_sweep(g.indptr, g.indices, labels, order) == 0:
            break
    dense, k = _dense_relabel(labels)
    quality = modularity(g, dense) if g.m > 0 else None
    return NodeLabeling(kind="community", labels=dense, k=k, quality=quality)


def modularity(g: Graph, labels) -> float | None:
    """Newman modularity Q = sum_c [e_c/m - (d_c/2m)^2]; None when m = 0."""
    if g.m == 0:
        return None
    lab = np.asarray(labels, dtype=np.int64)
    _, inv = np.unique(lab, return_inverse=True)
    eu, ev = g.edges()
    m = g.m
    intra = inv[eu] == inv[ev]
    k = int(inv.max()) + 1
    e_c = np.bincount(inv[eu][intra], minlength=k)
    d_c = np.bincount(inv, weights=g.degrees.astype(np.float64), minlength=k)
    return float((e_c / m).sum() - ((d_c / (2.0 * m)) ** 2).sum())


# ---------------------------------------------------------------------------
# role discovery
# ---------------------------------------------------------------------------

def extract_role_features(g: Graph, stats: NodeStatsTable) -> np.ndarray:
    """Per-node structural feature matrix, standardized column-wise.

    Six base features — degree, triangles, local_clustering, kcore, mean
    neighbor degree, max neighbor degree — plus one aggregation level: the
    mean (columns 6-11) and sum (columns 12-17) of each base feature over
    the node's neighbors. Every column is shifted/scaled to zero mean and
    unit variance; constant columns become all zeros. Nodes without
    neighbors get zero for all neighbor aggregates (pre-standardization).
    """
    n = g.n
    deg = g.degrees.astype(np.float64)
    base = np.empty((n, 6), dtype=np.float64)
    base[:, 0] = deg
    base[:, 1] = stats.column("triangles")
    base[:, 2] = stats.column("local_clustering")
    base[:, 3] = stats.column("kcore")

    nbr_deg = deg[g.indices]
    adj = sp.csr_matrix(
        (np.ones(len(g.indices)), g.indices, g.indptr), shape=(n, n)
    )
    safe_deg = np.where(deg > 0, deg, 1.0)
    base[:, 4] = np.where(deg > 0, adj @ deg / safe_deg, 0.0)
    if len(g.indices):
        starts = np.minimum(g.indptr[:-1], len(g.indices) - 1)
        mx = np.maximum.reduceat(nbr_deg, starts)
        base[:, 5] = np.where(deg > 0, mx, 0.0)
    else:
        base[:, 5] = 0.0

    sums = adj @ base
    means = np.where(deg[:, None] > 0, sums / safe_deg[:, None], 0.0)
    feats = np.hstack([base, means, sums])

    mu = feats.mean(axis=0)
    sigma = feats.std(axis=0)
    out = np.zeros_like(feats)
    nz = sigma > 0
    out[:, nz] = (feats[:, nz] - mu[nz]) / sigma[nz]
    return out


def _kmeans(X: np.ndarray, k: int, rng: np.random.Generator) -> tuple[np.ndarray, float]:
    """Deterministic k-means: seeded k-means++ init, argmin assignment with
    lowest-index tie-break, stop on stable assignment. Returns (labels, wcss)."""
    n = len(X)
    centers = np.empty((k, X.shape[1]))
    centers[0] = X[int(rng.integers(0, n))]
    d2 = ((X - centers[0]) ** 2).sum(axis=1)
    for c in range(1, k):
        total = d2.sum()
        if total <= 0.0:
            centers[c:] = centers[0]
            break
        r = rng.random() * total
        idx = int(np.searchsorted(np.cumsum(d2), r, side="right"))
        centers[c] = X[min(idx, n - 1)]
        d2 = np.minimum(d2, ((X - centers[c]) ** 2).sum(axis=1))
    assign = cdist(X, centers, "sqeuclidean").argmin(axis=1)
    for _ in range(300):
        for c in range(k):
            mask = assign == c
            if mask.any():
                centers[c] = X[mask].mean(axis=0)
        new_assign = cdist(X, centers, "sqeuclidean").argmin(axis=1)
        if np.array_equal(new_assign, assign):
            break
        assign = new_assign
    wcss = float(((X - centers[assign]) ** 2).sum())
    return assign.astype(np.int64), wcss


def discover_roles(features: np.ndarray, k: int | None = None, seed: int = 0) -> NodeLabeling:
    """Cluster feature rows into structural roles.

    With ``k=None``, the count is picked from 2..8 at the largest relative
    drop in within-cluster sum of squares (clamped to the number of distinct
    feature rows). Identical rows always land in the same role; roles are
    numbered by ascending mean of the first feature column (degree), so role
    0 is the lowest-degree role. Quality is wcss/tss in [0, 1], lower being
    tighter.
    """
    X = np.asarray(features, dtype=np.float64)
    n = len(X)
    if n == 0:
        raise ValueError("feature matrix has no rows")
    if k is not None and not 1 <= k <= n:
        raise ValueError("k must be in [1, n]")

    distinct = len(np.unique(X, axis=0))
    if k is None:
        k = _auto_k(X, min(AUTO_K_RANGE[1], distinct), seed)
    assign, wcss = _kmeans(X, k, np.random.Generator(np.random.PCG64(seed)))

    # order roles by mean degree column, then compress to a dense range
    present = np.unique(assign)
    means = np.array([X[assign == c, 0].mean() for c in present])
    order = np.argsort(means, kind="stable")
    remap = np.empty(int(present.max()) + 1, dtype=np.int64)
    remap[present[order]] = np.arange(len(present))
    labels = remap[assign]

    tss = float(((X - X.mean(axis=0)) ** 2).sum())
    quality = wcss / tss if tss > 0 else 0.0
    return NodeLabeling(kind="role", labels=labels, k=len(present), quality=quality)


def _auto_k(X: np.ndarray, k_max: int, seed: int) -> int:
    """Elbow rule: the k in [2, k_max] with the largest relative wcss drop
    (wcss[k-1] - wcss[k]) / wcss[k-1]; falls back to 1 for degenerate input."""
    if k_max < 2:
        return 1
    wcss = {}
    for k in range(1, k_max + 1):
        _, wcss[k] = _kmeans(X, k, np.random.Generator(np.random.PCG64(seed)))
    best_k, best_drop = 2, -1.0
    for k in range(2, k_max + 1):
        prev = wcss[k - 1]
        drop = (prev - wcss[k]) / prev if prev > 0 else 0.0
        if drop > best_drop:
            best_k, best_drop = k, drop
    return best_k
