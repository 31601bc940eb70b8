"""Multi-scale statistics: global graph stats, per-node stats, distributions.

Per-node work is partitioned over a thread pool; every kernel writes only
its own node range, so results are bit-identical for any worker count.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, connected_components

__all__ = [
    "NodeStatsTable",
    "GraphStats",
    "Distribution",
    "NODE_COLUMNS",
    "GRAPH_STAT_FIELDS",
    "count_triangles",
    "kcore_decomposition",
    "clustering_coefficients",
    "assortativity",
    "max_clique_lower_bound",
    "compute_all",
    "distribution",
]

NODE_COLUMNS = ("degree", "triangles", "local_clustering", "kcore", "wedges")
_REAL_COLUMNS = frozenset({"local_clustering"})
_DIST_BINS = 50

GRAPH_STAT_FIELDS = (
    "n",
    "m",
    "density",
    "max_degree",
    "avg_degree",
    "total_triangles",
    "avg_clustering",
    "global_clustering",
    "max_kcore",
    "assortativity",
    "max_clique_lb",
    "components",
)

# seeds tried by the greedy clique search; more buys quality, not correctness
_CLIQUE_SEED_CAP = 32


@dataclass
class NodeStatsTable:
    """Columnar per-node statistics."""

    degree: np.ndarray
    triangles: np.ndarray
    local_clustering: np.ndarray
    kcore: np.ndarray
    wedges: np.ndarray

    def column(self, name: str) -> np.ndarray:
        if name not in NODE_COLUMNS:
            raise ValueError(f"unknown statistic: {name!r}")
        return getattr(self, name)

    @property
    def n(self) -> int:
        return len(self.degree)

    def to_dict(self) -> dict:
        return {name: getattr(self, name).tolist() for name in NODE_COLUMNS}

    @classmethod
    def from_dict(cls, d: dict) -> "NodeStatsTable":
        cols = {}
        for name in NODE_COLUMNS:
            dtype = np.float64 if name in _REAL_COLUMNS else np.int64
            cols[name] = np.asarray(d[name], dtype=dtype)
        return cls(**cols)


@dataclass
class GraphStats:
    """Global scalar statistics. ``assortativity`` is None when the degree
    variance over edge endpoints is zero (cliques, cycles, empty graphs)."""

    n: int
    m: int
    density: float
    max_degree: int
    avg_degree: float
    total_triangles: int
    avg_clustering: float
    global_clustering: float
    max_kcore: int
    assortativity: float | None
    max_clique_lb: int
    components: int

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in GRAPH_STAT_FIELDS}

    @classmethod
    def from_dict(cls, d: dict) -> "GraphStats":
        return cls(**{name: d[name] for name in GRAPH_STAT_FIELDS})


@dataclass
class Distribution:
    """Empirical distribution of one node-level statistic.

    ``pdf[i]`` is the relative frequency of ``values[i]``, ``cdf`` is
    P(X <= x) and ``ccdf`` is P(X >= x); integer statistics keep their exact
    value support, real ones are binned.
    """

    statistic: str
    values: np.ndarray
    pdf: np.ndarray
    cdf: np.ndarray
    ccdf: np.ndarray

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "values": self.values.tolist(),
            "pdf": self.pdf.tolist(),
            "cdf": self.cdf.tolist(),
            "ccdf": self.ccdf.tolist(),
        }


def _chunk_bounds(g: Graph, parts: int) -> np.ndarray:
    """Node range boundaries with roughly equal adjacency mass per chunk."""
    if parts <= 1 or g.n == 0:
        return np.array([0, g.n], dtype=np.int64)
    total = g.indptr[-1]
    targets = (np.arange(1, parts) * total) // parts
    cuts = np.searchsorted(g.indptr, targets, side="left")
    bounds = np.unique(np.concatenate([[0], cuts, [g.n]]))
    return bounds.astype(np.int64)


def count_triangles(g: Graph, workers: int | None = None) -> tuple[np.ndarray, int]:
    """Exact per-node triangle counts and the distinct-triangle total."""
    out = np.zeros(g.n, dtype=np.int64)
    if g.m == 0:
        return out, 0
    if workers is None or workers <= 1:
        _kernels.triangle_counts_range(g.indptr, g.indices, 0, g.n, out)
    else:
        bounds = _chunk_bounds(g, workers * 4)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(
                    _kernels.triangle_counts_range, g.indptr, g.indices, lo, hi, out
                )
                for lo, hi in zip(bounds[:-1], bounds[1:])
            ]
            for f in futures:
                f.result()
    return out, int(out.sum()) // 3


def kcore_decomposition(g: Graph) -> tuple[np.ndarray, int]:
    """Core number per node (bucket peeling) and the maximum core."""
    cores = _kernels.core_numbers(g.indptr, g.indices, g.degrees)
    return cores, int(cores.max()) if g.n else 0


def clustering_coefficients(
    g: Graph, triangles: np.ndarray
) -> tuple[np.ndarray, float, float]:
    """Local coefficients, their mean, and global clustering (transitivity).

    Nodes with degree < 2 have no wedges and get local coefficient 0.
    """
    deg = g.degrees
    wedges = deg * (deg - 1) // 2
    local = np.zeros(g.n, dtype=np.float64)
    has = wedges > 0
    local[has] = triangles[has] / wedges[has]
    avg = float(local.mean()) if g.n else 0.0
    total_wedges = int(wedges.sum())
    kappa = float(triangles.sum() / total_wedges) if total_wedges else 0.0
    return local, avg, kappa


def assortativity(g: Graph) -> float | None:
    """Pearson correlation of endpoint degrees over both edge orientations;
    None when the endpoint-degree variance is zero."""
    if g.m == 0:
        return None
    u, v = g.edges()
    deg = g.degrees
    x = np.concatenate([deg[u], deg[v]]).astype(np.float64)
    y = np.concatenate([deg[v], deg[u]]).astype(np.float64)
    mx = x.mean()
    my = y.mean()
    vx = ((x - mx) ** 2).mean()
    vy = ((y - my) ** 2).mean()
    if vx == 0.0 or vy == 0.0:
        return None
    cov = ((x - mx) * (y - my)).mean()
    return float(cov / np.sqrt(vx * vy))


def max_clique_lower_bound(g: Graph, cores: np.ndarray | None = None) -> int:
    """Size of a clique found greedily inside the max-core subgraph.

    A lower bound on the true max clique; deterministic (seeds and
    candidates ordered by node id).
    """
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    if cores is None:
        cores, _ = kcore_decomposition(g)
    kmax = int(cores.max())
    seeds = np.flatnonzero(cores == kmax)[:_CLIQUE_SEED_CAP]
    best = 1
    for seed in seeds:
        members = [int(seed)]
        for cand in g.neighbors(seed):
            cand = int(cand)
            if cores[cand] != kmax:
                continue
            if all(g.has_edge(cand, w) for w in members):
                members.append(cand)
        if len(members) > best:
            best = len(members)
    return best


def compute_all(g: Graph, workers: int | None = None) -> tuple[GraphStats, NodeStatsTable]:
    """The full statistic stack; parallel only in race-free per-node kernels,
    so the output is independent of ``workers``."""
    deg = g.degrees.astype(np.int64)
    tri, total_tri = count_triangles(g, workers=workers)
    cores, max_core = kcore_decomposition(g)
    local, avg_local, kappa = clustering_coefficients(g, tri)
    wedges = deg * (deg - 1) // 2
    table = NodeStatsTable(
        degree=deg,
        triangles=tri,
        local_clustering=local,
        kcore=cores,
        wedges=wedges,
    )
    _, n_components = connected_components(g)
    n, m = g.n, g.m
    stats = GraphStats(
        n=n,
        m=m,
        density=(2.0 * m / (n * (n - 1))) if n > 1 else 0.0,
        max_degree=int(deg.max()) if n else 0,
        avg_degree=(2.0 * m / n) if n else 0.0,
        total_triangles=total_tri,
        avg_clustering=avg_local,
        global_clustering=kappa,
        max_kcore=max_core,
        assortativity=assortativity(g),
        max_clique_lb=max_clique_lower_bound(g, cores),
        components=n_components,
    )
    return stats, table


def distribution(table: NodeStatsTable, column: str) -> Distribution:
    """Histogram + CDF + CCDF for one node statistic.

    Integer statistics keep their exact observed values; real ones are
    binned into equal-width bins (bin centers reported).
    """
    col = table.column(column)
    if len(col) == 0:
        raise ValueError("no nodes")
    if column in _REAL_COLUMNS and len(np.unique(col)) > 1:
        lo, hi = float(col.min()), float(col.max())
        edges = np.linspace(lo, hi, _DIST_BINS + 1)
        idx = np.clip(np.searchsorted(edges, col, side="right") - 1, 0, _DIST_BINS - 1)
        counts = np.bincount(idx, minlength=_DIST_BINS)
        occupied = np.flatnonzero(counts)
        values = (edges[occupied] + edges[occupied + 1]) / 2.0
        counts = counts[occupied]
    else:
        values, counts = np.unique(col, return_counts=True)
    pdf = counts / counts.sum()
    cdf = np.cumsum(pdf)
    ccdf = np.cumsum(pdf[::-1])[::-1]
    return Distribution(statistic=column, values=values, pdf=pdf, cdf=cdf, ccdf=ccdf)
