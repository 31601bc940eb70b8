"""Edge-list ingestion, normalization, and the compact adjacency structure.

Every other module consumes the :class:`Graph` built here: an immutable,
undirected, simple graph stored in CSR form with sorted neighbor lists.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

__all__ = [
    "Graph",
    "EdgeListFile",
    "NormalizationReport",
    "GraphParseError",
    "parse_edge_list",
    "build_graph",
    "connected_components",
]


class GraphParseError(ValueError):
    """Malformed edge-list input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass
class NormalizationReport:
    self_loops_dropped: int = 0
    duplicates_merged: int = 0

    def to_dict(self) -> dict:
        return {
            "self_loops_dropped": self.self_loops_dropped,
            "duplicates_merged": self.duplicates_merged,
        }


@dataclass
class EdgeListFile:
    """Edge rows as read, before normalization.

    ``edges`` holds integer id pairs: literal values when the input ids were
    already non-negative integers, otherwise dense first-seen ids with the
    original strings kept in ``labels``. Optional third/fourth columns are
    retained as ``weights``/``timestamps`` metadata and ignored by analytics.
    """

    edges: np.ndarray  # (k, 2) int64
    labels: list[str] | None = None  # id -> original label; None = literal ids
    weights: np.ndarray | None = None
    timestamps: np.ndarray | None = None
    comments: list[str] = field(default_factory=list)
    declared_n: int = 0  # from a "#nodes N" header or Matrix Market dims


_MM_HEADER = re.compile(r"^%%matrixmarket\b", re.IGNORECASE)
_NODES_HEADER = re.compile(r"^#\s*nodes\s+(\d+)\s*$", re.IGNORECASE)
_PLAIN_INT = re.compile(r"^\d+$")


def parse_edge_list(text: str | bytes) -> EdgeListFile:
    """Parse whitespace-delimited edge rows into an :class:`EdgeListFile`.

    Rows carry 2-4 columns (u, v, optional weight, optional timestamp);
    lines starting with ``%`` or ``#`` are comments. A Matrix Market header
    plus its dimension row is accepted; MM ids are 1-based and shifted down.
    A ``#nodes N`` comment declares the node count so isolated nodes survive
    round-trips. Plain integer ids are kept literally (1-based inputs are
    normalized later, in :func:`build_graph`); non-integer ids get dense
    first-seen numbering with the originals kept as labels. Rows with fewer
    than 2 or more than 4 tokens raise :class:`GraphParseError` with the
    line number. Empty input is valid.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")

    comments: list[str] = []
    declared_n = 0
    mm_mode = False
    mm_dims_pending = False
    rows: list[tuple[str, str]] = []
    extras: list[tuple[int, float, float]] = []  # (row index, weight, timestamp)
    lines_of_rows: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("%") or line.startswith("#"):
            comments.append(line)
            if _MM_HEADER.match(line):
                mm_mode = True
                mm_dims_pending = True
            m = _NODES_HEADER.match(line)
            if m:
                declared_n = max(declared_n, int(m.group(1)))
            continue
        tokens = line.split()
        if mm_dims_pending:
            # first data row of an MM file is "rows cols nnz"
            if len(tokens) not in (2, 3) or not all(_PLAIN_INT.match(t) for t in tokens):
                raise GraphParseError("expected Matrix Market dimension row", lineno)
            declared_n = max(declared_n, int(tokens[0]), int(tokens[1]))
            mm_dims_pending = False
            continue
        if len(tokens) < 2:
            raise GraphParseError("expected at least 2 columns", lineno)
        if len(tokens) > 4:
            raise GraphParseError(f"expected at most 4 columns, got {len(tokens)}", lineno)
        w = t = float("nan")
        if len(tokens) >= 3:
            try:
                w = float(tokens[2])
                if len(tokens) == 4:
                    t = float(tokens[3])
            except ValueError:
                raise GraphParseError("non-numeric weight/timestamp column", lineno) from None
        if len(tokens) >= 3:
            extras.append((len(rows), w, t))
        rows.append((tokens[0], tokens[1]))
        lines_of_rows.append(lineno)

    labels: list[str] | None = None
    k = len(rows)
    edges = np.empty((k, 2), dtype=np.int64)
    all_int = all(_PLAIN_INT.match(u) and _PLAIN_INT.match(v) for u, v in rows)
    if all_int:
        for i, (u, v) in enumerate(rows):
            ui, vi = int(u), int(v)
            if mm_mode:
                if ui < 1 or vi < 1:
                    raise GraphParseError("Matrix Market ids are 1-based", lines_of_rows[i])
                ui -= 1
                vi -= 1
            edges[i, 0] = ui
            edges[i, 1] = vi
    else:
        # arbitrary string labels: dense ids in first-seen order
        idmap: dict[str, int] = {}
        for i, (u, v) in enumerate(rows):
            for j, tok in enumerate((u, v)):
                if tok not in idmap:
                    idmap[tok] = len(idmap)
                edges[i, j] = idmap[tok]
        labels = list(idmap)

    weights = timestamps = None
    if extras:
        weights = np.full(k, np.nan)
        timestamps = np.full(k, np.nan)
        for i, w, t in extras:
            weights[i] = w
            timestamps[i] = t

    return EdgeListFile(
        edges=edges,
        labels=labels,
        weights=weights,
        timestamps=timestamps,
        comments=comments,
        declared_n=declared_n,
    )


class Graph:
    """Immutable undirected simple graph over dense ids ``[0, n)``.

    Adjacency is CSR: the neighbors of ``v`` are
    ``indices[indptr[v]:indptr[v+1]]``, sorted ascending. Safe to share
    across threads once built.
    """

    __slots__ = ("n", "m", "indptr", "indices", "labels", "normalization", "_degrees")

    def __init__(self, n, indptr, indices, labels=None, normalization=None):
        self.n = int(n)
        self.m = int(len(indices) // 2)
        self.indptr = indptr
        self.indices = indices
        self.labels = labels
        self.normalization = normalization or NormalizationReport()
        self._degrees = np.diff(indptr).astype(np.int64)

    @classmethod
    def from_edges(cls, n: int, u, v, labels=None, normalization=None) -> "Graph":
        """Build from parallel endpoint arrays; loops/duplicates are dropped."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        u, v = _dedupe_pairs(n, u, v)
        indptr, indices = _build_csr(n, u, v)
        return cls(n, indptr, indices, labels=labels, normalization=normalization)

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays with u < v, sorted lexicographically by (u, v)."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self._degrees)
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return src[keep], dst[keep]

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def induce(self, nodes: np.ndarray) -> "Graph":
        """Induced subgraph on ``nodes`` (sorted unique ids), relabeled densely."""
        nodes = np.asarray(nodes, dtype=np.int64)
        remap = np.full(self.n, -1, dtype=np.int64)
        remap[nodes] = np.arange(len(nodes), dtype=np.int64)
        u, v = self.edges()
        keep = (remap[u] >= 0) & (remap[v] >= 0)
        labels = None
        if self.labels is not None:
            labels = [self.labels[i] for i in nodes]
        return Graph.from_edges(len(nodes), remap[u[keep]], remap[v[keep]], labels=labels)

    def dump(self) -> str:
        """Canonical edge-list text: ``#nodes N`` header then sorted ``u v`` rows."""
        u, v = self.edges()
        lines = [f"#nodes {self.n}"]
        lines.extend(f"{a} {b}" for a, b in zip(u.tolist(), v.tolist()))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _dedupe_pairs(n: int, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unique unordered pairs with self-loops removed."""
    if not u.size:
        return u, v
    keep = u != v
    lo = np.minimum(u[keep], v[keep])
    hi = np.maximum(u[keep], v[keep])
    key = np.unique(lo * np.int64(n) + hi)
    return key // n, key % n


def _build_csr(n: int, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """CSR arrays from undirected endpoint pairs (assumed loop/dup free)."""
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    order = np.lexsort((dst, src))
    src = src[order]
    dst = dst[order]
    counts = np.bincount(src, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, dst.astype(np.int32)


def build_graph(raw: EdgeListFile) -> Graph:
    """Normalize parsed rows into a simple undirected :class:`Graph`.

    Self-loops are dropped and duplicate/reciprocal rows merged; the counts
    land in ``graph.normalization``. Plain integer inputs that never mention
    id 0 and declare no node count follow the common 1-based convention and
    are shifted down by one.
    """
    edges = raw.edges
    if raw.labels is None and raw.declared_n == 0 and edges.size and edges.min() >= 1:
        edges = edges - 1
    if edges.size:
        max_id = int(edges.max())
        n = max(max_id + 1, raw.declared_n)
    else:
        n = raw.declared_n
    if raw.labels is not None:
        n = max(n, len(raw.labels))

    report = NormalizationReport()
    if edges.size:
        loops = int((edges[:, 0] == edges[:, 1]).sum())
        u, v = _dedupe_pairs(n, edges[:, 0], edges[:, 1])
        report.self_loops_dropped = loops
        report.duplicates_merged = len(edges) - loops - len(u)
    else:
        u = v = np.empty(0, dtype=np.int64)

    return Graph.from_edges(n, u, v, labels=raw.labels, normalization=report)


def connected_components(g: Graph) -> tuple[np.ndarray, int]:
    """Per-node component ids (dense, in order of first appearance) and count."""
    if g.n == 0:
        return np.empty(0, dtype=np.int64), 0
    mat = csr_matrix(
        (np.ones(len(g.indices), dtype=np.int8), g.indices, g.indptr), shape=(g.n, g.n)
    )
    count, labels = _cc(mat, directed=False)
    # relabel so ids follow first appearance by node id
    first = np.full(count, g.n, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(g.n))
    rank = np.empty(count, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(count)
    return rank[labels], int(count)
