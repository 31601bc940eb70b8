import numpy as np
import pytest

from graphrepo.graph import Graph


def make_graph(n, pairs):
    """Graph from a list of (u, v) tuples."""
    if pairs:
        u, v = zip(*pairs)
    else:
        u, v = [], []
    return Graph.from_edges(n, list(u), list(v))


def clique_pairs(size, offset=0):
    return [(offset + i, offset + j) for i in range(size) for j in range(i + 1, size)]


def star_pairs(size, offset=0):
    """size nodes total: node `offset` is the center."""
    return [(offset, offset + i) for i in range(1, size)]


def cycle_pairs(size, offset=0):
    return [(offset + i, offset + (i + 1) % size) for i in range(size)]


def path_pairs(size, offset=0):
    return [(offset + i, offset + i + 1) for i in range(size - 1)]


def two_clique_bridge(size=5):
    """Two disjoint cliques joined by a single edge between nodes 0 and size."""
    pairs = clique_pairs(size) + clique_pairs(size, offset=size) + [(0, size)]
    return make_graph(2 * size, pairs)


def random_pairs(rng, n, p):
    """Dense-style seeded random pair set for oracle comparisons."""
    mask = rng.random((n, n)) < p
    return [(i, j) for i in range(n) for j in range(i + 1, n) if mask[i, j]]


def random_graph(seed, n=None, p=None):
    rng = np.random.Generator(np.random.PCG64(seed))
    if n is None:
        n = int(rng.integers(4, 65))
    if p is None:
        p = float(rng.uniform(0.02, 0.35))
    return make_graph(n, random_pairs(rng, n, p))


@pytest.fixture
def tmp_store(tmp_path):
    from graphrepo.store import DatasetStore

    return DatasetStore(tmp_path / "store")
