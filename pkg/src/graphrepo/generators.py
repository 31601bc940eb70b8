"""Synthetic graph generation: model-based, pattern-based, and hybrid.

All randomness flows through numpy's PCG64 bit generator seeded from the
config, so identical config + seed reproduces the identical edge set on any
platform.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

__all__ = [
    "ConfigError",
    "PatternSpec",
    "GeneratorConfig",
    "validate_config",
    "generate",
    "gen_erdos_renyi",
    "gen_preferential_attachment",
    "gen_chung_lu",
    "gen_block_chung_lu",
    "gen_pattern",
    "compose",
    "chung_lu_probabilities",
    "block_chung_lu_probabilities",
]

MODEL_KINDS = ("erdos_renyi", "preferential_attachment", "chung_lu", "block_chung_lu")
PATTERN_KINDS = ("node", "edge", "clique", "star", "cycle", "chain")
_PATTERN_MIN_SIZE = {"clique": 2, "star": 2, "cycle": 3, "chain": 2}
_PATTERN_FIXED_SIZE = {"node": 1, "edge": 2}


class ConfigError(ValueError):
    """A generator config violates one of its constraints."""


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# ---------------------------------------------------------------------------
# model-based generators
# ---------------------------------------------------------------------------

def _decode_pair(t: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Map linear indices in [0, C(n,2)) to pairs (i, j), i < j, in
    lexicographic order. Float estimate plus exact integer fix-up."""
    tn = 2 * n - 1
    i = ((tn - np.sqrt(tn * tn - 8.0 * t)) / 2.0).astype(np.int64)
    i = np.clip(i, 0, n - 2)
    while True:  # offset(i) = i*(2n-1-i)/2 must satisfy offset(i) <= t
        bad = i * (tn - i) // 2 > t
        if not bad.any():
            break
        i[bad] -= 1
    while True:  # and t < offset(i+1)
        bad = (i + 1) * (tn - i - 1) // 2 <= t
        if not bad.any():
            break
        i[bad] += 1
    j = t - i * (tn - i) // 2 + i + 1
    return i, j


def gen_erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): every unordered pair is an edge independently with
    probability p, sampled by geometric index skipping in O(m) expected."""
    if n < 0:
        raise ConfigError("n must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ConfigError("p must be in [0, 1]")
    total = n * (n - 1) // 2
    if total == 0 or p == 0.0:
        return Graph.from_edges(n, [], [])
    if p == 1.0:
        u, v = np.triu_indices(n, k=1)
        return Graph.from_edges(n, u, v)
    rng = _rng(seed)
    logq = np.log1p(-p)
    picks = []
    pos = -1
    while pos < total - 1:
        est = int((total - 1 - pos) * p * 1.1) + 16
        gaps = np.floor(np.log1p(-rng.random(est)) / logq).astype(np.int64) + 1
        idx = pos + np.cumsum(gaps)
        inside = idx < total
        if inside.all():
            picks.append(idx)
            pos = int(idx[-1])
        else:
            picks.append(idx[inside])
            break
    t = np.concatenate(picks) if picks else np.empty(0, dtype=np.int64)
    u, v = _decode_pair(t, n)
    return Graph.from_edges(n, u, v)


def gen_preferential_attachment(n: int, m_attach: int, seed: int = 0) -> Graph:
    """Degree-proportional growth from a clique on m_attach + 1 nodes; each
    new node attaches to m_attach distinct nodes (rejection on repeats)."""
    if m_attach < 1:
        raise ConfigError("m_attach must be >= 1")
    if n < m_attach + 2:
        raise ConfigError("n must be at least m_attach + 2")
    rng = _rng(seed)
    s = m_attach + 1
    eu, ev = [list(a) for a in np.triu_indices(s, k=1)]
    targets = [x for pair in zip(eu, ev) for x in pair]
    for new in range(s, n):
        chosen: set[int] = set()
        while len(chosen) < m_attach:
            chosen.add(targets[rng.integers(0, len(targets))])
        for t in sorted(chosen):
            eu.append(t)
            ev.append(new)
            targets.append(t)
            targets.append(new)
    return Graph.from_edges(n, eu, ev)


def _chung_lu_pairs(
    w: np.ndarray, divisor: float, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (i, j) drawn independently with probability
    min(1, w_i * w_j / divisor), via the weight-sorted skipping walk."""
    n = len(w)
    order = np.argsort(-w, kind="stable")
    ws = w[order]
    eu: list[int] = []
    ev: list[int] = []
    for a in range(n - 1):
        wa = ws[a]
        if wa <= 0.0:
            break
        b = a + 1
        p = min(wa * ws[b] / divisor, 1.0)
        while b < n and p > 0.0:
            if p < 1.0:
                r = rng.random()
                if r <= 0.0:
                    r = 5e-324
                b += int(np.log(r) / np.log1p(-p))
            if b < n:
                q = min(wa * ws[b] / divisor, 1.0)
                if rng.random() < q / p:
                    eu.append(int(order[a]))
                    ev.append(int(order[b]))
                p = q
                b += 1
    return np.asarray(eu, dtype=np.int64), np.asarray(ev, dtype=np.int64)


def gen_chung_lu(weights, seed: int = 0) -> Graph:
    """Chung-Lu: edge (i, j) with probability min(1, w_i * w_j / sum(w)).

    Warns when the heaviest pair would exceed probability 1 (clamped)."""
    w = np.asarray(weights, dtype=np.float64)
    if (w < 0).any():
        raise ConfigError("weights must be non-negative")
    total = float(w.sum())
    if len(w) < 2 or total <= 0.0:
        return Graph.from_edges(len(w), [], [])
    top = np.sort(w)[-2:]
    if top[0] * top[1] > total:
        warnings.warn(
            "weight vector is infeasible: largest pair probability clamped at 1",
            RuntimeWarning,
            stacklevel=2,
        )
    u, v = _chung_lu_pairs(w, total, _rng(seed))
    return Graph.from_edges(len(w), u, v)


def gen_block_chung_lu(block_sizes, weights, mu: float, seed: int = 0) -> Graph:
    """Community-structured Chung-Lu: a pair in the same block is an edge
    with probability w_i*w_j*((1-mu)/W_block + mu/W); a cross-block pair with
    probability w_i*w_j*mu/W. Expected degrees stay ~w_i; mu=1 degenerates to
    plain Chung-Lu and mu=0 to independent per-block graphs."""
    sizes = [int(b) for b in block_sizes]
    w = np.asarray(weights, dtype=np.float64)
    _validate_block_args(sizes, w, mu)
    n = len(w)
    total = float(w.sum())
    if total <= 0.0:
        return Graph.from_edges(n, [], [])
    rng = _rng(seed)
    parts_u: list[np.ndarray] = []
    parts_v: list[np.ndarray] = []
    offset = 0
    for size in sizes:
        wb = w[offset:offset + size]
        wsum = float(wb.sum())
        if size >= 2 and wsum > 0.0:
            rate = (1.0 - mu) / wsum + mu / total
            if rate > 0.0:
                u, v = _chung_lu_pairs(wb, 1.0 / rate, rng)
                parts_u.append(u + offset)
                parts_v.append(v + offset)
        offset += size
    if mu > 0.0:
        block_of = np.repeat(np.arange(len(sizes)), sizes)
        u, v = _chung_lu_pairs(w, total / mu, rng)
        cross = block_of[u] != block_of[v]
        parts_u.append(u[cross])
        parts_v.append(v[cross])
    if parts_u:
        u = np.concatenate(parts_u)
        v = np.concatenate(parts_v)
    else:
        u = v = np.empty(0, dtype=np.int64)
    return Graph.from_edges(n, u, v)


def _validate_block_args(sizes, w, mu):
    if not sizes or any(s < 1 for s in sizes):
        raise ConfigError("block sizes must be positive")
    if sum(sizes) != len(w):
        raise ConfigError("block sizes must sum to the weight vector length")
    if (w < 0).any():
        raise ConfigError("weights must be non-negative")
    if not 0.0 <= mu <= 1.0:
        raise ConfigError("mu must be in [0, 1]")


def chung_lu_probabilities(weights) -> np.ndarray:
    """Exact pairwise edge probabilities of the Chung-Lu model (zero diag)."""
    w = np.asarray(weights, dtype=np.float64)
    total = float(w.sum())
    if total <= 0.0:
        return np.zeros((len(w), len(w)))
    p = np.clip(np.outer(w, w) / total, 0.0, 1.0)
    np.fill_diagonal(p, 0.0)
    return p


def block_chung_lu_probabilities(block_sizes, weights, mu: float) -> np.ndarray:
    """Exact pairwise edge probabilities of the block Chung-Lu model."""
    sizes = [int(b) for b in block_sizes]
    w = np.asarray(weights, dtype=np.float64)
    _validate_block_args(sizes, w, mu)
    total = float(w.sum())
    n = len(w)
    if total <= 0.0:
        return np.zeros((n, n))
    block_of = np.repeat(np.arange(len(sizes)), sizes)
    block_sums = np.bincount(block_of, weights=w)
    rate = np.full((n, n), mu / total)
    for c in range(len(sizes)):
        if block_sums[c] > 0:
            idx = np.flatnonzero(block_of == c)
            rate[np.ix_(idx, idx)] = (1.0 - mu) / block_sums[c] + mu / total
    p = np.clip(np.outer(w, w) * rate, 0.0, 1.0)
    np.fill_diagonal(p, 0.0)
    return p


# ---------------------------------------------------------------------------
# pattern-based generators
# ---------------------------------------------------------------------------

def gen_pattern(pattern_type: str, size: int | None = None) -> Graph:
    """Canonical pattern graph: clique, star (node 0 is the center), cycle,
    chain, single edge, or single node."""
    if pattern_type in _PATTERN_FIXED_SIZE:
        fixed = _PATTERN_FIXED_SIZE[pattern_type]
        if size is not None and size != fixed:
            raise ConfigError(f"pattern {pattern_type!r} has fixed size {fixed}")
        size = fixed
    elif pattern_type in _PATTERN_MIN_SIZE:
        if size is None:
            raise ConfigError(f"pattern {pattern_type!r} requires a size")
        if size < _PATTERN_MIN_SIZE[pattern_type]:
            raise ConfigError(
                f"pattern {pattern_type!r} requires size >= {_PATTERN_MIN_SIZE[pattern_type]}"
            )
    else:
        raise ConfigError(f"unknown pattern type {pattern_type!r}")

    s = size
    if pattern_type == "node":
        return Graph.from_edges(1, [], [])
    if pattern_type == "edge":
        return Graph.from_edges(2, [0], [1])
    if pattern_type == "clique":
        u, v = np.triu_indices(s, k=1)
        return Graph.from_edges(s, u, v)
    if pattern_type == "star":
        return Graph.from_edges(s, np.zeros(s - 1, dtype=np.int64), np.arange(1, s))
    if pattern_type == "cycle":
        u = np.arange(s)
        return Graph.from_edges(s, u, (u + 1) % s)
    # chain
    u = np.arange(s - 1)
    return Graph.from_edges(s, u, u + 1)


def compose(base: Graph, patterns: list[Graph], wiring: str = "bridge", seed: int = 0) -> Graph:
    """Disjoint union of base and pattern instances; with "bridge" wiring,
    one random edge per instance from a pattern node to a base node."""
    if wiring not in ("bridge", "disjoint"):
        raise ConfigError(f"unknown wiring rule {wiring!r}")
    if wiring == "bridge" and base.n == 0:
        raise ConfigError("bridge wiring requires a non-empty base graph")
    rng = _rng(seed)
    eu, ev = base.edges()
    parts_u = [eu]
    parts_v = [ev]
    offset = base.n
    for pat in patterns:
        pu, pv = pat.edges()
        parts_u.append(pu + offset)
        parts_v.append(pv + offset)
        if wiring == "bridge":
            anchor = offset + int(rng.integers(0, pat.n))
            target = int(rng.integers(0, base.n))
            parts_u.append(np.array([anchor], dtype=np.int64))
            parts_v.append(np.array([target], dtype=np.int64))
        offset += pat.n
    return Graph.from_edges(offset, np.concatenate(parts_u), np.concatenate(parts_v))


# ---------------------------------------------------------------------------
# config plumbing
# ---------------------------------------------------------------------------

@dataclass
class PatternSpec:
    pattern: str
    size: int | None = None
    count: int = 1

    def to_dict(self) -> dict:
        d: dict = {"pattern": self.pattern}
        if self.size is not None:
            d["size"] = self.size
        d["count"] = self.count
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PatternSpec":
        return cls(pattern=d["pattern"], size=d.get("size"), count=int(d.get("count", 1)))


@dataclass
class GeneratorConfig:
    """Tagged union over the supported generation requests."""

    kind: str
    seed: int = 0
    n: int | None = None
    p: float | None = None
    m_attach: int | None = None
    weights: list[float] | None = None
    block_sizes: list[int] | None = None
    mu: float | None = None
    patterns: list[PatternSpec] = field(default_factory=list)
    wiring: str = "bridge"
    base: "GeneratorConfig | None" = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind, "seed": self.seed}
        if self.kind == "erdos_renyi":
            d.update(n=self.n, p=self.p)
        elif self.kind == "preferential_attachment":
            d.update(n=self.n, m_attach=self.m_attach)
        elif self.kind == "chung_lu":
            d.update(weights=self.weights)
        elif self.kind == "block_chung_lu":
            d.update(block_sizes=self.block_sizes, weights=self.weights, mu=self.mu)
        elif self.kind == "pattern":
            d.update(patterns=[p.to_dict() for p in self.patterns], wiring=self.wiring)
        elif self.kind == "hybrid":
            d.update(
                base=self.base.to_dict() if self.base else None,
                patterns=[p.to_dict() for p in self.patterns],
                wiring=self.wiring,
            )
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GeneratorConfig":
        if not isinstance(d, dict) or "kind" not in d:
            raise ConfigError("config must be an object with a 'kind' tag")
        base = d.get("base")
        return cls(
            kind=d["kind"],
            seed=int(d.get("seed", 0)),
            n=d.get("n"),
            p=d.get("p"),
            m_attach=d.get("m_attach"),
            weights=d.get("weights"),
            block_sizes=d.get("block_sizes"),
            mu=d.get("mu"),
            patterns=[PatternSpec.from_dict(p) for p in d.get("patterns", [])],
            wiring=d.get("wiring", "bridge"),
            base=cls.from_dict(base) if base is not None else None,
        )


def validate_config(cfg: GeneratorConfig) -> None:
    """Raise :class:`ConfigError` naming the violated constraint."""
    kind = cfg.kind
    if kind == "erdos_renyi":
        if cfg.n is None or cfg.n < 0:
            raise ConfigError("erdos_renyi requires n >= 0")
        if cfg.p is None or not 0.0 <= cfg.p <= 1.0:
            raise ConfigError("erdos_renyi requires p in [0, 1]")
    elif kind == "preferential_attachment":
        if cfg.m_attach is None or cfg.m_attach < 1:
            raise ConfigError("preferential_attachment requires m_attach >= 1")
        if cfg.n is None or cfg.n < cfg.m_attach + 2:
            raise ConfigError("preferential_attachment requires n >= m_attach + 2")
    elif kind == "chung_lu":
        if cfg.weights is None:
            raise ConfigError("chung_lu requires a weight vector")
        if any(w < 0 for w in cfg.weights):
            raise ConfigError("weights must be non-negative")
    elif kind == "block_chung_lu":
        if cfg.weights is None or cfg.block_sizes is None or cfg.mu is None:
            raise ConfigError("block_chung_lu requires block_sizes, weights, and mu")
        _validate_block_args(
            [int(b) for b in cfg.block_sizes], np.asarray(cfg.weights, dtype=np.float64), cfg.mu
        )
    elif kind == "pattern":
        if not cfg.patterns:
            raise ConfigError("pattern generator requires at least one pattern")
        _validate_patterns(cfg)
    elif kind == "hybrid":
        if cfg.base is None:
            raise ConfigError("hybrid requires a base model config")
        if cfg.base.kind not in MODEL_KINDS:
            raise ConfigError(f"hybrid base must be a model kind, got {cfg.base.kind!r}")
        validate_config(cfg.base)
        _validate_patterns(cfg)
    else:
        raise ConfigError(f"unknown generator kind {kind!r}")


def _validate_patterns(cfg: GeneratorConfig) -> None:
    if cfg.wiring not in ("bridge", "disjoint"):
        raise ConfigError(f"unknown wiring rule {cfg.wiring!r}")
    for spec in cfg.patterns:
        if spec.count < 1:
            raise ConfigError("pattern count must be >= 1")
        gen_pattern(spec.pattern, spec.size)  # raises on bad type/size


def _instantiate_patterns(specs: list[PatternSpec]) -> list[Graph]:
    return [gen_pattern(s.pattern, s.size) for s in specs for _ in range(s.count)]


def generate(cfg: GeneratorConfig) -> Graph:
    """Validate and run one generation request."""
    validate_config(cfg)
    kind = cfg.kind
    if kind == "erdos_renyi":
        return gen_erdos_renyi(cfg.n, cfg.p, cfg.seed)
    if kind == "preferential_attachment":
        return gen_preferential_attachment(cfg.n, cfg.m_attach, cfg.seed)
    if kind == "chung_lu":
        return gen_chung_lu(cfg.weights, cfg.seed)
    if kind == "block_chung_lu":
        return gen_block_chung_lu(cfg.block_sizes, cfg.weights, cfg.mu, cfg.seed)
    if kind == "pattern":
        instances = _instantiate_patterns(cfg.patterns)
        return compose(instances[0], instances[1:], cfg.wiring, cfg.seed)
    # hybrid: the base config carries its own seed; bridges use ours
    base = generate(cfg.base)
    return compose(base, _instantiate_patterns(cfg.patterns), cfg.wiring, cfg.seed)
