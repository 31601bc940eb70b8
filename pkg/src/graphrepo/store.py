"""File-backed dataset catalog: ingest, generation, queries, visualization.

Layout on disk::

    <root>/catalog.json             collections taxonomy + dataset id order
    <root>/datasets/<id>/           one immutable directory per dataset
        edges.txt                   canonical edge dump ("#nodes N" header)
        record.json                 DatasetRecord
        node_stats.json             per-node statistic columns
        distributions.json          precomputed pdf/cdf/ccdf per column
        layout.json                 default visualization payload
    <root>/workspace/<key>.json     saved items per workspace key

Processing is atomic: everything is computed in a temp directory and moved
into place with a rename, so the catalog never exposes partial records.
Graphs above ``processing_threshold`` edges are processed on a background
worker and appear in the catalog only when finished (poll ``job_status``).
"""
from __future__ import annotations

import re
import shutil
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import jsonio
from .clustering import detect_communities, discover_roles, extract_role_features
from .generators import GeneratorConfig, generate
from .graph import Graph, build_graph, parse_edge_list
from .layout import compute_layout
from .sampling import sample_induced_edge, sample_node
from .stats import (
    GRAPH_STAT_FIELDS,
    NODE_COLUMNS,
    NodeStatsTable,
    compute_all,
    distribution,
)

__all__ = ["DatasetStore", "UnknownDatasetError", "DEFAULT_COLLECTIONS"]

DEFAULT_COLLECTIONS = (
    "social", "biological", "brain", "citation", "collaboration", "communication",
    "ecology", "economic", "infrastructure", "interaction", "protein", "retweet",
    "road", "scientific", "technological", "web", "synthetic", "miscellaneous",
)

LABEL_KINDS = ("community", "role")
WORKSPACE_ITEM_KINDS = ("query", "graph", "preference")
_KEY_RE = re.compile(r"[A-Za-z0-9_-]{1,64}")


class UnknownDatasetError(KeyError):
    """Lookup of a dataset id that is not in the catalog."""


def slugify(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")
    return slug or "graph"


def validate_predicates(predicates, allowed) -> list[tuple[str, float, float]]:
    """Normalize predicates into (stat, lo, hi) triples.

    Accepts either ``{"stat": ..., "min": ..., "max": ...}`` dicts or
    ``(stat, min, max)`` triples; ``None`` bounds mean unbounded.
    """
    out = []
    for p in predicates:
        if not isinstance(p, dict):
            p = {"stat": p[0], "min": p[1], "max": p[2]}
        stat = p.get("stat")
        if stat not in allowed:
            raise ValueError(f"unknown statistic: {stat!r}")
        lo = -np.inf if p.get("min") is None else float(p["min"])
        hi = np.inf if p.get("max") is None else float(p["max"])
        if lo > hi:
            raise ValueError(f"predicate on {stat!r} has min > max")
        out.append((stat, lo, hi))
    return out


def _matches(value, triples) -> bool:
    for _, lo, hi in triples:
        if value is None or not lo <= value <= hi:
            return False
    return True


def build_viz_payload(g: Graph, max_nodes: int) -> dict:
    """Sample (if needed), lay out, and package a graph for rendering."""
    if g.n > max_nodes:
        fraction = max_nodes / g.n
        res = (sample_induced_edge(g, fraction) if g.m > 0
               else sample_node(g, fraction))
        view, node_map, sampled = res.graph, res.node_map, True
    else:
        view, node_map, sampled = g, np.arange(g.n), False
    pos = compute_layout(view, seed=0)
    eu, ev = view.edges()
    return {
        "n": g.n,
        "m": g.m,
        "max_nodes": max_nodes,
        "sampled": sampled,
        "nodes": node_map.tolist(),
        "positions": [[round(float(x), 4), round(float(y), 4)] for x, y in pos],
        "edges": np.column_stack([eu, ev]).tolist() if len(eu) else [],
    }


class DatasetStore:
    """Thread-safe catalog over a directory tree (single process)."""

    def __init__(
        self,
        root: str | Path,
        collections=None,
        processing_threshold: int = 1_000_000,
        viz_max_nodes: int = 5000,
    ):
        self.root = Path(root)
        self.datasets_dir = self.root / "datasets"
        self.workspace_dir = self.root / "workspace"
        self.tmp_dir = self.root / "tmp"
        for d in (self.datasets_dir, self.workspace_dir, self.tmp_dir):
            d.mkdir(parents=True, exist_ok=True)
        self.processing_threshold = processing_threshold
        self.viz_max_nodes = viz_max_nodes
        self._lock = threading.RLock()
        self._jobs: dict[str, dict] = {}
        self._graph_cache: dict[str, Graph] = {}
        self._executor = ThreadPoolExecutor(max_workers=2)

        catalog_path = self.root / "catalog.json"
        if catalog_path.exists():
            catalog = jsonio.read_json(catalog_path)
        else:
            catalog = {
                "collections": list(collections or DEFAULT_COLLECTIONS),
                "order": [],
            }
            jsonio.write_json(catalog_path, catalog)
        if collections is not None:
            catalog["collections"] = list(collections)
        self.collections: list[str] = catalog["collections"]
        self._order: list[str] = [
            ds for ds in catalog["order"] if (self.datasets_dir / ds / "record.json").exists()
        ]
        self._records: dict[str, dict] = {
            ds: jsonio.read_json(self.datasets_dir / ds / "record.json") for ds in self._order
        }

    # -- catalog ------------------------------------------------------------

    def _save_catalog(self) -> None:
        tmp = self.tmp_dir / f"catalog-{uuid.uuid4().hex}.json"
        jsonio.write_json(tmp, {"collections": self.collections, "order": self._order})
        tmp.replace(self.root / "catalog.json")

    def list_records(self) -> list[dict]:
        with self._lock:
            return [self._records[ds] for ds in self._order]

    def get_record(self, dataset_id: str) -> dict:
        with self._lock:
            try:
                return self._records[dataset_id]
            except KeyError:
                raise UnknownDatasetError(dataset_id) from None

    def dataset_path(self, dataset_id: str) -> Path:
        self.get_record(dataset_id)
        return self.datasets_dir / dataset_id

    def get_graph(self, dataset_id: str) -> Graph:
        with self._lock:
            cached = self._graph_cache.get(dataset_id)
        if cached is not None:
            return cached
        text = (self.dataset_path(dataset_id) / "edges.txt").read_text(encoding="utf-8")
        g = build_graph(parse_edge_list(text))
        with self._lock:
            if len(self._graph_cache) >= 8:
                self._graph_cache.pop(next(iter(self._graph_cache)))
            self._graph_cache[dataset_id] = g
        return g

    def download(self, dataset_id: str) -> str:
        return (self.dataset_path(dataset_id) / "edges.txt").read_text(encoding="utf-8")

    # -- ingest / generate ----------------------------------------------------

    def ingest_dataset(self, name: str, collection: str, payload: str | bytes,
                       metadata: dict | None = None) -> dict:
        """Parse, process, and store an uploaded edge list.

        Returns ``{"record": ...}`` when processed synchronously, or
        ``{"job": id, "status": "processing"}`` for graphs above the
        background threshold.
        """
        if collection not in self.collections:
            raise ValueError(f"unknown collection {collection!r}")
        g = build_graph(parse_edge_list(payload))
        if g.n == 0:
            raise ValueError("no edges or nodes")
        if g.m > self.processing_threshold:
            job_id = uuid.uuid4().hex
            with self._lock:
                self._jobs[job_id] = {"status": "processing", "dataset_id": None}
            self._executor.submit(self._run_job, job_id, g, name, collection,
                                  "uploaded", metadata or {})
            return {"job": job_id, "status": "processing"}
        record = self._process_and_commit(g, name, collection, "uploaded", metadata or {})
        return {"record": record}

    def generate_dataset(self, config: GeneratorConfig | dict, name: str,
                         collection: str = "synthetic") -> dict:
        """Generate from a validated config and store like an upload."""
        cfg = GeneratorConfig.from_dict(config) if isinstance(config, dict) else config
        g = generate(cfg)
        if g.n == 0:
            raise ValueError("no edges or nodes")
        record = self._process_and_commit(
            g, name, collection, "generated", {"config": cfg.to_dict()}
        )
        return {"record": record}

    def job_status(self, job_id: str) -> dict:
        with self._lock:
            if job_id not in self._jobs:
                raise UnknownDatasetError(job_id)
            return dict(self._jobs[job_id])

    def _run_job(self, job_id, g, name, collection, source, metadata) -> None:
        try:
            record = self._process_and_commit(g, name, collection, source, metadata)
        except Exception as exc:  # surfaced through the status endpoint
            with self._lock:
                self._jobs[job_id] = {"status": "failed", "error": str(exc)}
            return
        with self._lock:
            self._jobs[job_id] = {"status": "complete", "dataset_id": record["id"]}

    def _process_and_commit(self, g, name, collection, source, metadata) -> dict:
        if collection not in self.collections:
            raise ValueError(f"unknown collection {collection!r}")
        stats, table = compute_all(g)
        work = self.tmp_dir / uuid.uuid4().hex
        work.mkdir()
        try:
            (work / "edges.txt").write_text(g.dump(), encoding="utf-8")
            jsonio.write_json(work / "node_stats.json", table.to_dict())
            jsonio.write_json(
                work / "distributions.json",
                {col: distribution(table, col).to_dict() for col in NODE_COLUMNS},
            )
            jsonio.write_json(work / "layout.json", self._viz_payload(g, self.viz_max_nodes))
            record = {
                "id": None,
                "name": name,
                "collection": collection,
                "source": source,
                "metadata": {
                    "description": metadata.get("description", ""),
                    "citation": metadata.get("citation", ""),
                    "notes": list(metadata.get("notes", [])),
                    **({"config": metadata["config"]} if "config" in metadata else {}),
                },
                "stats": stats.to_dict(),
                "created_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                "processing": "complete",
                "paths": {
                    "edges": "edges.txt",
                    "node_stats": "node_stats.json",
                    "layout": "layout.json",
                    "distributions": "distributions.json",
                },
            }
            with self._lock:
                base = slugify(name)
                slug, k = base, 2
                while slug in self._records:
                    slug = f"{base}-{k}"
                    k += 1
                record["id"] = slug
                jsonio.write_json(work / "record.json", record)
                work.replace(self.datasets_dir / slug)
                self._order.append(slug)
                self._records[slug] = record
                self._save_catalog()
            return record
        finally:
            if work.exists():
                shutil.rmtree(work, ignore_errors=True)

    # -- queries --------------------------------------------------------------

    def query_graphs(self, predicates) -> dict:
        """Ids matching every predicate, plus the full stat point set."""
        triples = validate_predicates(predicates, GRAPH_STAT_FIELDS)
        records = self.list_records()
        matches = [
            r["id"] for r in records
            if all(_matches(r["stats"][stat], [(stat, lo, hi)]) for stat, lo, hi in triples)
        ]
        points = [
            {"id": r["id"], "name": r["name"], "collection": r["collection"],
             "stats": r["stats"]}
            for r in records
        ]
        return {"matches": matches, "points": points}

    def _node_table(self, dataset_id: str) -> NodeStatsTable:
        path = self.dataset_path(dataset_id) / "node_stats.json"
        return NodeStatsTable.from_dict(jsonio.read_json(path))

    def query_nodes(self, dataset_id: str, predicates, columns=None) -> dict:
        """Node ids satisfying every predicate, plus columns for plotting."""
        triples = validate_predicates(predicates, NODE_COLUMNS)
        table = self._node_table(dataset_id)
        keep = np.ones(table.n, dtype=bool)
        for stat, lo, hi in triples:
            col = table.column(stat)
            keep &= (col >= lo) & (col <= hi)
        wanted = list(dict.fromkeys([t[0] for t in triples] + list(columns or [])))
        for name in wanted:
            if name not in NODE_COLUMNS:
                raise ValueError(f"unknown statistic: {name!r}")
        return {
            "id": dataset_id,
            "n": table.n,
            "matches": np.flatnonzero(keep).tolist(),
            "columns": {name: table.column(name).tolist() for name in wanted},
        }

    def drill(self, dataset_id: str, statistics) -> dict:
        """Group nodes by the first statistic; each further statistic becomes
        a per-group value list (the shared-x drill table)."""
        if not statistics:
            raise ValueError("drill requires at least one statistic")
        for name in statistics:
            if name not in NODE_COLUMNS:
                raise ValueError(f"unknown statistic: {name!r}")
        table = self._node_table(dataset_id)
        x = table.column(statistics[0])
        rest = list(statistics[1:])
        groups = []
        for val in np.unique(x):
            idx = np.flatnonzero(x == val)
            groups.append({
                "x": val.item(),
                "count": int(len(idx)),
                "values": {name: table.column(name)[idx].tolist() for name in rest},
            })
        return {"x": statistics[0], "columns": rest, "groups": groups}

    def get_distribution(self, dataset_id: str, statistic: str) -> dict:
        if statistic not in NODE_COLUMNS:
            raise ValueError(f"unknown statistic: {statistic!r}")
        dists = jsonio.read_json(self.dataset_path(dataset_id) / "distributions.json")
        return dists[statistic]

    # -- visualization ----------------------------------------------------------

    def _viz_payload(self, g: Graph, max_nodes: int) -> dict:
        return build_viz_payload(g, max_nodes)

    def get_visualization(self, dataset_id: str, max_nodes: int | None = None,
                          labels: str | None = None) -> dict:
        """Layout payload for one dataset, optionally colored by labeling."""
        self.get_record(dataset_id)
        if labels is not None and labels not in LABEL_KINDS:
            raise ValueError(f"labels must be one of {LABEL_KINDS}")
        if max_nodes is None:
            max_nodes = self.viz_max_nodes
        if max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")
        if max_nodes == self.viz_max_nodes:
            payload = dict(jsonio.read_json(self.dataset_path(dataset_id) / "layout.json"))
        else:
            payload = self._viz_payload(self.get_graph(dataset_id), max_nodes)
        payload["id"] = dataset_id
        if labels is not None:
            payload["labels"] = self._labeling(dataset_id, payload, labels)
        return payload

    def _labeling(self, dataset_id: str, payload: dict, kind: str) -> dict:
        """Community or role labels for the displayed (possibly sampled) nodes."""
        if payload["sampled"]:
            nodes = np.asarray(payload["nodes"], dtype=np.int64)
            view = self.get_graph(dataset_id).induce(nodes)
        else:
            view = self.get_graph(dataset_id)
        if kind == "community":
            return detect_communities(view, seed=0).to_dict()
        _, table = compute_all(view)
        feats = extract_role_features(view, table)
        return discover_roles(feats, k=None, seed=0).to_dict()

    # -- workspace ---------------------------------------------------------------

    def _workspace_path(self, key: str) -> Path:
        if not _KEY_RE.fullmatch(key):
            raise ValueError("workspace key must match [A-Za-z0-9_-]{1,64}")
        return self.workspace_dir / f"{key}.json"

    def list_items(self, key: str) -> list[dict]:
        path = self._workspace_path(key)
        if not path.exists():
            return []
        return jsonio.read_json(path)["items"]

    def save_item(self, key: str, kind: str, payload) -> dict:
        if kind not in WORKSPACE_ITEM_KINDS:
            raise ValueError(f"item kind must be one of {WORKSPACE_ITEM_KINDS}")
        item = {
            "id": uuid.uuid4().hex,
            "kind": kind,
            "payload": payload,
            "created_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        }
        with self._lock:
            items = self.list_items(key)
            items.append(item)
            jsonio.write_json(self._workspace_path(key), {"items": items})
        return item

    def delete_item(self, key: str, item_id: str) -> None:
        with self._lock:
            items = self.list_items(key)
            kept = [it for it in items if it["id"] != item_id]
            if len(kept) == len(items):
                raise UnknownDatasetError(item_id)
            jsonio.write_json(self._workspace_path(key), {"items": kept})
