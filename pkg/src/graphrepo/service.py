"""HTTP/JSON API over a :class:`~graphrepo.store.DatasetStore`.

Everything the web client does goes through these endpoints; responses are
deterministic for a given catalog state. JSON bodies are rendered with the
shared canonical serializer so stats payloads are byte-identical to the CLI.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np
from fastapi import FastAPI, File, Form, Request, UploadFile
from fastapi.responses import PlainTextResponse, Response
from fastapi.staticfiles import StaticFiles

from . import jsonio
from .generators import GeneratorConfig, generate
from .graph import GraphParseError
from .stats import compute_all
from .store import DatasetStore, UnknownDatasetError, build_viz_payload

__all__ = ["create_app"]

PREVIEW_VIZ_LIMIT = 1500


class CanonicalJSONResponse(Response):
    media_type = "application/json"

    def render(self, content) -> bytes:
        return jsonio.to_json(content).encode("utf-8")


def _query_predicates(request: Request) -> list[dict]:
    """Decode stat.min= / stat.max= query parameters into predicate dicts."""
    preds: dict[str, dict] = {}
    for key, value in request.query_params.multi_items():
        for suffix in (".min", ".max"):
            if key.endswith(suffix):
                stat = key[: -len(suffix)]
                preds.setdefault(stat, {"stat": stat})[suffix[1:]] = float(value)
    return list(preds.values())


def intra_block_fraction(g, block_sizes) -> float | None:
    """Share of edges with both endpoints in the same block; None if m=0."""
    if g.m == 0:
        return None
    block_of = np.repeat(np.arange(len(block_sizes)), block_sizes)
    eu, ev = g.edges()
    return float(np.mean(block_of[eu] == block_of[ev]))


def create_app(store: DatasetStore, frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="graphrepo", default_response_class=CanonicalJSONResponse)

    @app.exception_handler(UnknownDatasetError)
    async def _unknown(request, exc):
        return CanonicalJSONResponse({"detail": f"not found: {exc.args[0]}"}, status_code=404)

    @app.exception_handler(GraphParseError)
    async def _parse_error(request, exc):
        return CanonicalJSONResponse(
            {"detail": str(exc), "line": exc.line}, status_code=400
        )

    @app.exception_handler(ValueError)
    async def _bad_request(request, exc):
        return CanonicalJSONResponse({"detail": str(exc)}, status_code=400)

    @app.get("/graphs")
    def list_graphs():
        return {"collections": store.collections, "graphs": store.list_records()}

    @app.get("/graphs/{dataset_id}")
    def get_graph(dataset_id: str):
        return store.get_record(dataset_id)

    @app.get("/graphs/{dataset_id}/nodes")
    def get_nodes(dataset_id: str, request: Request, columns: str | None = None):
        wanted = [c for c in (columns.split(",") if columns else []) if c]
        return store.query_nodes(dataset_id, _query_predicates(request), wanted)

    @app.get("/graphs/{dataset_id}/distribution/{statistic}")
    def get_distribution(dataset_id: str, statistic: str):
        return store.get_distribution(dataset_id, statistic)

    @app.get("/graphs/{dataset_id}/viz")
    def get_viz(dataset_id: str, max_nodes: int | None = None, labels: str | None = None):
        return store.get_visualization(dataset_id, max_nodes=max_nodes, labels=labels)

    @app.get("/graphs/{dataset_id}/download")
    def download(dataset_id: str):
        return PlainTextResponse(
            store.download(dataset_id),
            headers={"Content-Disposition": f'attachment; filename="{dataset_id}.txt"'},
        )

    @app.post("/graphs")
    async def upload(
        file: UploadFile = File(...),
        name: str | None = Form(None),
        collection: str = Form("miscellaneous"),
        description: str = Form(""),
        citation: str = Form(""),
    ):
        payload = await file.read()
        title = name or Path(file.filename or "graph").stem
        result = store.ingest_dataset(
            title, collection, payload,
            {"description": description, "citation": citation},
        )
        status = 202 if "job" in result else 201
        return CanonicalJSONResponse(result, status_code=status)

    @app.get("/jobs/{job_id}")
    def job_status(job_id: str):
        return store.job_status(job_id)

    @app.post("/generate")
    async def generate_graph(request: Request):
        body = await request.json()
        cfg = GeneratorConfig.from_dict(body.get("config") or {})
        if body.get("preview"):
            return _preview(cfg)
        result = store.generate_dataset(
            cfg,
            name=body.get("name") or f"{cfg.kind} graph",
            collection=body.get("collection", "synthetic"),
        )
        return CanonicalJSONResponse(result, status_code=201)

    def _preview(cfg: GeneratorConfig) -> dict:
        g = generate(cfg)
        stats, _ = compute_all(g)
        fraction = (
            intra_block_fraction(g, cfg.block_sizes)
            if cfg.kind == "block_chung_lu" else None
        )
        viz = build_viz_payload(g, PREVIEW_VIZ_LIMIT) if 0 < g.n <= PREVIEW_VIZ_LIMIT else None
        return {
            "preview": True,
            "config": cfg.to_dict(),
            "stats": stats.to_dict(),
            "intra_block_fraction": fraction,
            "viz": viz,
        }

    @app.post("/query")
    async def query(request: Request):
        body = await request.json()
        return store.query_graphs(body.get("predicates", []))

    @app.post("/graphs/{dataset_id}/drill")
    async def drill(dataset_id: str, request: Request):
        body = await request.json()
        return store.drill(dataset_id, body.get("statistics", []))

    @app.get("/workspace/{key}/items")
    def list_items(key: str):
        return {"items": store.list_items(key)}

    @app.post("/workspace/{key}/items")
    async def save_item(key: str, request: Request):
        body = await request.json()
        item = store.save_item(key, body.get("kind", ""), body.get("payload"))
        return CanonicalJSONResponse(item, status_code=201)

    @app.delete("/workspace/{key}/items/{item_id}")
    def delete_item(key: str, item_id: str):
        store.delete_item(key, item_id)
        return {"deleted": item_id}

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="ui")

    return app
