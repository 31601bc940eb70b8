"""Brute-force reference implementations used to validate the fast engine.

Everything here favors obviousness over speed: adjacency sets, explicit
loops, and textbook formulas. Intended for graphs with n <= a few hundred.
"""
from __future__ import annotations

import numpy as np


def adjacency_sets(n: int, edges) -> list[set]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def triangle_counts(n: int, edges) -> list[int]:
    """tri(v) by checking every neighbor pair for adjacency."""
    adj = adjacency_sets(n, edges)
    out = []
    for v in range(n):
        nb = sorted(adj[v])
        t = 0
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if nb[j] in adj[nb[i]]:
                    t += 1
        out.append(t)
    return out


def total_triangles(n: int, edges) -> int:
    """Count triangles by enumerating all node triples."""
    adj = adjacency_sets(n, edges)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if j not in adj[i]:
                continue
            for k in range(j + 1, n):
                if k in adj[i] and k in adj[j]:
                    total += 1
    return total


def core_numbers(n: int, edges) -> list[int]:
    """core(v) = largest k such that v survives iterative k-peeling."""
    adj = adjacency_sets(n, edges)
    cores = [0] * n
    max_deg = max((len(a) for a in adj), default=0)
    for k in range(1, max_deg + 1):
        alive = set(range(n))
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if sum(1 for u in adj[v] if u in alive) < k:
                    alive.discard(v)
                    changed = True
        for v in alive:
            cores[v] = k
    return cores


def wedges(n: int, edges) -> list[int]:
    adj = adjacency_sets(n, edges)
    return [len(a) * (len(a) - 1) // 2 for a in adj]


def local_clustering(n: int, edges) -> list[float]:
    tri = triangle_counts(n, edges)
    wed = wedges(n, edges)
    return [tri[v] / wed[v] if wed[v] > 0 else 0.0 for v in range(n)]


def global_clustering(n: int, edges) -> float:
    w = sum(wedges(n, edges))
    if w == 0:
        return 0.0
    return 3.0 * total_triangles(n, edges) / w


def components(n: int, edges) -> list[int]:
    """Component labels by BFS, numbered in order of first appearance."""
    adj = adjacency_sets(n, edges)
    label = [-1] * n
    next_label = 0
    for s in range(n):
        if label[s] != -1:
            continue
        queue = [s]
        label[s] = next_label
        while queue:
            v = queue.pop()
            for u in adj[v]:
                if label[u] == -1:
                    label[u] = next_label
                    queue.append(u)
        next_label += 1
    return label


def max_clique(n: int, edges) -> int:
    """Exact maximum clique size (Bron-Kerbosch with pivoting)."""
    adj = adjacency_sets(n, edges)
    best = [1 if n else 0]

    def expand(r: set, p: set, x: set) -> None:
        if not p and not x:
            best[0] = max(best[0], len(r))
            return
        if len(r) + len(p) <= best[0]:
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    if n:
        expand(set(), set(range(n)), set())
    return best[0]


def assortativity(n: int, edges) -> float | None:
    """Pearson correlation of endpoint degrees over both orientations."""
    adj = adjacency_sets(n, edges)
    deg = [len(a) for a in adj]
    xs, ys = [], []
    for u in range(n):
        for v in adj[u]:
            xs.append(deg[u])
            ys.append(deg[v])
    if not xs:
        return None
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    sx = x.std()
    sy = y.std()
    if sx == 0.0 or sy == 0.0:
        return None
    return float(((x - x.mean()) * (y - y.mean())).mean() / (sx * sy))


def ccdf(values) -> list[tuple[float, float]]:
    """(x, P[X >= x]) for each distinct x, by sorting and counting."""
    vals = sorted(values)
    n = len(vals)
    out = []
    for x in sorted(set(vals)):
        at_least = sum(1 for v in vals if v >= x)
        out.append((x, at_least / n))
    return out


def modularity(n: int, edges, labels) -> float:
    """Q from the definition: (1/2m) * sum_ij (A_ij - d_i d_j / 2m) delta."""
    adj = adjacency_sets(n, edges)
    deg = [len(a) for a in adj]
    m = sum(deg) // 2
    two_m = 2.0 * m
    q = 0.0
    for i in range(n):
        for j in range(n):
            if labels[i] != labels[j]:
                continue
            a_ij = 1.0 if j in adj[i] else 0.0
            q += a_ij - deg[i] * deg[j] / two_m
    return q / two_m


def role_features(n: int, edges) -> np.ndarray:
    """The 18-column role feature matrix, built with per-node loops."""
    adj = adjacency_sets(n, edges)
    deg = [len(a) for a in adj]
    tri = triangle_counts(n, edges)
    loc = local_clustering(n, edges)
    cores = core_numbers(n, edges)

    base = np.zeros((n, 6))
    for v in range(n):
        nd = [deg[u] for u in adj[v]]
        base[v] = [deg[v], tri[v], loc[v], cores[v],
                   sum(nd) / len(nd) if nd else 0.0, max(nd) if nd else 0.0]
    means = np.zeros((n, 6))
    sums = np.zeros((n, 6))
    for v in range(n):
        if adj[v]:
            rows = np.array([base[u] for u in sorted(adj[v])])
            sums[v] = rows.sum(axis=0)
            means[v] = rows.mean(axis=0)
    feats = np.hstack([base, means, sums])
    out = np.zeros_like(feats)
    for c in range(feats.shape[1]):
        col = feats[:, c]
        sd = col.std()
        if sd > 0:
            out[:, c] = (col - col.mean()) / sd
    return out
