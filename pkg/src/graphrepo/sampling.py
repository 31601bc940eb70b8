"""Graph sampling: node, edge, and totally-induced edge methods.

Each sampler returns the sampled subgraph together with a map from its node
ids back to the originals, so per-node results can be joined upstream.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

__all__ = ["SampleConfig", "SampleResult", "sample", "sample_node", "sample_edge",
           "sample_induced_edge"]

METHODS = ("node", "edge", "induced_edge")


@dataclass
class SampleConfig:
    method: str
    fraction: float
    seed: int = 0

    def validate(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown sampling method {self.method!r}")
        if not 0.0 < self.fraction <= 1.0:
            raise ValueError("fraction must be in (0, 1]")

    @property
    def target(self) -> str:
        """What the fraction budgets: nodes or edges."""
        return "edges" if self.method == "edge" else "nodes"

    def to_dict(self) -> dict:
        return {"method": self.method, "fraction": self.fraction, "seed": self.seed}

    @classmethod
    def from_dict(cls, d: dict) -> "SampleConfig":
        return cls(method=d["method"], fraction=float(d["fraction"]),
                   seed=int(d.get("seed", 0)))


@dataclass
class SampleResult:
    """``graph`` with ``node_map[i]`` = original id of sampled node i."""

    graph: Graph
    node_map: np.ndarray

    def to_dict(self) -> dict:
        return {"n": self.graph.n, "m": self.graph.m,
                "node_map": [int(x) for x in self.node_map]}


def _budget(fraction: float, total: int) -> int:
    """ceil(fraction * total) with a guard against float round-up artifacts."""
    return min(total, max(1, int(np.ceil(fraction * total - 1e-9))))


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def sample_node(g: Graph, fraction: float, seed: int = 0) -> SampleResult:
    """Uniformly pick ceil(fraction*n) nodes without replacement and induce."""
    if g.n == 0:
        raise ValueError("graph has no nodes")
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must be in (0, 1]")
    budget = _budget(fraction, g.n)
    chosen = np.sort(_rng(seed).choice(g.n, size=budget, replace=False))
    return SampleResult(graph=g.induce(chosen), node_map=chosen)


def sample_edge(g: Graph, fraction: float, seed: int = 0) -> SampleResult:
    """Uniformly pick ceil(fraction*m) edges; keep only their endpoints."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must be in (0, 1]")
    budget = _budget(fraction, g.m)
    eu, ev = g.edges()
    picked = _rng(seed).choice(g.m, size=budget, replace=False)
    u, v = eu[picked], ev[picked]
    nodes = np.unique(np.concatenate([u, v]))
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[nodes] = np.arange(len(nodes))
    sub = Graph.from_edges(len(nodes), remap[u], remap[v])
    return SampleResult(graph=sub, node_map=nodes)


def sample_induced_edge(g: Graph, fraction: float, seed: int = 0) -> SampleResult:
    """Totally-induced edge sampling.

    Stream edges in random order, collecting endpoints one at a time until
    exactly ceil(fraction*n) nodes are gathered (topping up with the
    lowest-id unused nodes if the edges run out), then induce the full
    subgraph on that node set.
    """
    if g.m == 0:
        raise ValueError("graph has no edges")
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must be in (0, 1]")
    budget = _budget(fraction, g.n)
    eu, ev = g.edges()
    perm = _rng(seed).permutation(g.m)
    seq = np.empty(2 * g.m, dtype=np.int64)
    seq[0::2] = eu[perm]
    seq[1::2] = ev[perm]
    _, first_idx = np.unique(seq, return_index=True)
    appearance = seq[np.sort(first_idx)]
    chosen = appearance[:budget]
    if len(chosen) < budget:
        spare = np.setdiff1d(np.arange(g.n), chosen, assume_unique=False)
        chosen = np.concatenate([chosen, spare[: budget - len(chosen)]])
    nodes = np.sort(chosen)
    return SampleResult(graph=g.induce(nodes), node_map=nodes)


def sample(g: Graph, config: SampleConfig) -> SampleResult:
    """Dispatch one sampling request."""
    config.validate()
    fn = {"node": sample_node, "edge": sample_edge,
          "induced_edge": sample_induced_edge}[config.method]
    return fn(g, config.fraction, config.seed)
