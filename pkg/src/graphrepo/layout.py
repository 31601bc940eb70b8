"""Seeded force-directed 2D layout with per-component grid placement."""
from __future__ import annotations

import numpy as np

from ._kernels import spring_layout_steps
from .graph import Graph, connected_components

__all__ = ["compute_layout"]

_GAP_FACTOR = 0.08


def compute_layout(g: Graph, seed: int = 0, iterations: int = 100) -> np.ndarray:
    """Spring-electrical layout; returns an (n, 2) float64 position array.

    Each connected component is laid out independently (random seeded start,
    fixed iteration count) and the components are then packed onto a grid of
    non-overlapping bounding boxes, largest component first. Deterministic
    per seed. A single isolated node sits at the origin.
    """
    n = g.n
    pos = np.zeros((n, 2), dtype=np.float64)
    if n == 0:
        return pos
    rng = np.random.Generator(np.random.PCG64(seed))
    comp, ncomp = connected_components(g)
    sizes = np.bincount(comp, minlength=ncomp)
    order = sorted(range(ncomp), key=lambda c: (-sizes[c], c))

    boxes = []
    for c in order:
        nodes = np.flatnonzero(comp == c)
        sub = g.induce(nodes) if ncomp > 1 else g
        width = max(1.0, np.sqrt(len(nodes)))
        local = rng.random((len(nodes), 2)) * width
        if len(nodes) > 1:
            spring_layout_steps(sub.indptr, sub.indices, local, iterations, width)
        local -= local.min(axis=0)
        boxes.append((nodes, local, local.max(axis=0)))

    cell = np.max([b[2] for b in boxes], axis=0)
    gap = _GAP_FACTOR * max(float(cell.max()), 1.0)
    cols = int(np.ceil(np.sqrt(ncomp)))
    for i, (nodes, local, _) in enumerate(boxes):
        origin = np.array([(i % cols) * (cell[0] + gap), (i // cols) * (cell[1] + gap)])
        pos[nodes] = local + origin
    return pos
