"""Numba kernels for the hot per-node loops.

All kernels are deterministic. The triangle kernel releases the GIL and
writes only to its own node range, so chunks can run on a thread pool and
the result is bit-identical for any worker count.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def triangle_counts_range(indptr, indices, lo, hi, out):
    """Per-node triangle counts for nodes in [lo, hi) via sorted-merge
    intersection of neighbor lists; each incident triangle is met twice."""
    for v in range(lo, hi):
        s = indptr[v]
        e = indptr[v + 1]
        total = 0
        for ei in range(s, e):
            a = indices[ei]
            i = s
            j = indptr[a]
            ja = indptr[a + 1]
            while i < e and j < ja:
                x = indices[i]
                y = indices[j]
                if x == y:
                    total += 1
                    i += 1
                    j += 1
                elif x < y:
                    i += 1
                else:
                    j += 1
        out[v] = total // 2


@njit(cache=True, nogil=True)
def core_numbers(indptr, indices, degrees):
    """Core number per node by bucket peeling in O(m)."""
    n = degrees.shape[0]
    core = degrees.astype(np.int64)
    if n == 0:
        return core
    md = 0
    for v in range(n):
        if core[v] > md:
            md = core[v]
    bins = np.zeros(md + 1, dtype=np.int64)
    for v in range(n):
        bins[core[v]] += 1
    start = 0
    for d in range(md + 1):
        cnt = bins[d]
        bins[d] = start
        start += cnt
    pos = np.empty(n, dtype=np.int64)
    vert = np.empty(n, dtype=np.int64)
    for v in range(n):
        pos[v] = bins[core[v]]
        vert[pos[v]] = v
        bins[core[v]] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0
    for i in range(n):
        v = vert[i]
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if core[u] > core[v]:
                du = core[u]
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    vert[pu] = w
                    vert[pw] = u
                    pos[u] = pw
                    pos[w] = pu
                bins[du] += 1
                core[u] -= 1
    return core


@njit(cache=True, nogil=True)
def label_propagation_sweep(indptr, indices, labels, order):
    """One asynchronous sweep: each node (in ``order``) adopts the most
    frequent neighbor label, smallest label on ties. Returns changes."""
    changed = 0
    for k in range(order.shape[0]):
        v = order[k]
        s = indptr[v]
        e = indptr[v + 1]
        if e == s:
            continue
        nb = np.empty(e - s, dtype=np.int64)
        for i in range(e - s):
            nb[i] = labels[indices[s + i]]
        nb.sort()
        best = nb[0]
        best_count = 1
        run = 1
        for i in range(1, nb.shape[0]):
            if nb[i] == nb[i - 1]:
                run += 1
            else:
                run = 1
            if run > best_count:  # strict: ties keep the smaller label
                best_count = run
                best = nb[i]
        if labels[v] != best:
            labels[v] = best
            changed += 1
    return changed


@njit(cache=True, nogil=True)
def spring_layout_steps(indptr, indices, pos, iterations, width):
    """Fruchterman-Reingold iterations in place over positions (n, 2)."""
    n = pos.shape[0]
    if n <= 1 or iterations <= 0:
        return
    k = width * np.sqrt(1.0 / n)
    t = width * 0.1
    dt = t / (iterations + 1)
    disp = np.empty((n, 2), dtype=np.float64)
    for _ in range(iterations):
        for i in range(n):
            disp[i, 0] = 0.0
            disp[i, 1] = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                dx = pos[i, 0] - pos[j, 0]
                dy = pos[i, 1] - pos[j, 1]
                d2 = dx * dx + dy * dy
                if d2 < 1e-12:
                    d2 = 1e-12
                    dx = 1e-6 * ((i + j) % 3 - 1)
                    dy = 1e-6
                f = k * k / d2
                disp[i, 0] += dx * f
                disp[i, 1] += dy * f
                disp[j, 0] -= dx * f
                disp[j, 1] -= dy * f
        for u in range(n):
            for ei in range(indptr[u], indptr[u + 1]):
                v = indices[ei]
                if v <= u:
                    continue
                dx = pos[u, 0] - pos[v, 0]
                dy = pos[u, 1] - pos[v, 1]
                d = np.sqrt(dx * dx + dy * dy)
                if d < 1e-9:
                    d = 1e-9
                f = d / k
                disp[u, 0] -= dx * f
                disp[u, 1] -= dy * f
                disp[v, 0] += dx * f
                disp[v, 1] += dy * f
        for i in range(n):
            dx = disp[i, 0]
            dy = disp[i, 1]
            d = np.sqrt(dx * dx + dy * dy)
            if d > 1e-12:
                step = d if d < t else t
                pos[i, 0] += dx / d * step
                pos[i, 1] += dy / d * step
        t -= dt
