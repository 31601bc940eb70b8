"""HTTP API: endpoints, status codes, error payloads, concurrency."""
import io
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from conftest import clique_pairs, make_graph, star_pairs

from graphrepo.service import create_app, intra_block_fraction
from graphrepo.store import DatasetStore

TRIANGLE = b"1 2\n2 3\n1 3\n"


@pytest.fixture
def client(tmp_store):
    return TestClient(create_app(tmp_store), raise_server_exceptions=False)


def upload(client, payload, name="sample", **form):
    return client.post(
        "/graphs",
        files={"file": ("edges.txt", io.BytesIO(payload), "text/plain")},
        data={"name": name, **form},
    )


# -- catalog and upload ----------------------------------------------------------

def test_catalog_starts_empty(client):
    body = client.get("/graphs").json()
    assert body["graphs"] == []
    assert "synthetic" in body["collections"]


def test_upload_triangle(client):
    r = upload(client, TRIANGLE, name="tri")
    assert r.status_code == 201
    rec = r.json()["record"]
    assert rec["stats"]["n"] == 3
    assert rec["stats"]["total_triangles"] == 1
    assert rec["stats"]["global_clustering"] == 1.0
    assert client.get(f"/graphs/{rec['id']}").json() == rec


def test_upload_duplicate_names_suffixed(client):
    a = upload(client, TRIANGLE, name="dup").json()["record"]["id"]
    b = upload(client, TRIANGLE, name="dup").json()["record"]["id"]
    assert (a, b) == ("dup", "dup-2")


def test_upload_parse_error_reports_line(client):
    r = upload(client, b"1 2\n3\n")
    assert r.status_code == 400
    body = r.json()
    assert body["line"] == 2
    assert "detail" in body


def test_upload_empty_payload(client):
    r = upload(client, b"")
    assert r.status_code == 400
    assert "no edges or nodes" in r.json()["detail"]


def test_upload_unknown_collection(client):
    r = upload(client, TRIANGLE, collection="wizardry")
    assert r.status_code == 400


def test_unknown_dataset_404(client):
    for path in ("/graphs/ghost", "/graphs/ghost/nodes", "/graphs/ghost/viz",
                 "/graphs/ghost/download", "/graphs/ghost/distribution/degree",
                 "/jobs/ghost"):
        assert client.get(path).status_code == 404, path


def test_download_round_trips(client):
    rec = upload(client, TRIANGLE, name="dl").json()["record"]
    r = client.get(f"/graphs/{rec['id']}/download")
    assert r.status_code == 200
    assert "attachment" in r.headers["content-disposition"]
    r2 = upload(client, r.content, name="again").json()["record"]
    assert r2["stats"] == rec["stats"]


def test_background_job_flow(tmp_path):
    store = DatasetStore(tmp_path / "s", processing_threshold=10)
    client = TestClient(create_app(store))
    payload = make_graph(7, clique_pairs(7)).dump().encode()
    r = upload(client, payload, name="slow")
    assert r.status_code == 202
    job = r.json()["job"]
    for _ in range(600):
        status = client.get(f"/jobs/{job}").json()
        if status["status"] == "complete":
            break
    assert status["status"] == "complete"
    assert client.get(f"/graphs/{status['dataset_id']}").json()["stats"]["m"] == 21


# -- node queries, distribution, drill ------------------------------------------

@pytest.fixture
def star_id(client):
    payload = make_graph(6, star_pairs(6)).dump().encode()
    return upload(client, payload, name="star6").json()["record"]["id"]


def test_node_query_predicates_in_query_string(client, star_id):
    r = client.get(f"/graphs/{star_id}/nodes?degree.min=5&degree.max=5&columns=degree,triangles")
    body = r.json()
    assert body["matches"] == [0]
    assert body["columns"]["degree"] == [5, 1, 1, 1, 1, 1]
    assert body["columns"]["triangles"] == [0] * 6
    empty = client.get(f"/graphs/{star_id}/nodes?triangles.min=1").json()
    assert empty["matches"] == []


def test_node_query_unknown_stat_400(client, star_id):
    assert client.get(f"/graphs/{star_id}/nodes?mana.min=1").status_code == 400
    assert client.get(f"/graphs/{star_id}/nodes?columns=mana").status_code == 400


def test_distribution_endpoint(client, star_id):
    body = client.get(f"/graphs/{star_id}/distribution/degree").json()
    assert body["statistic"] == "degree"
    assert body["values"] == [1, 5]
    assert body["pdf"] == [pytest.approx(5 / 6), pytest.approx(1 / 6)]
    assert client.get(f"/graphs/{star_id}/distribution/vibes").status_code == 400


def test_drill_endpoint(client, star_id):
    r = client.post(f"/graphs/{star_id}/drill", json={"statistics": ["degree", "triangles"]})
    groups = r.json()["groups"]
    assert [(g["x"], g["count"]) for g in groups] == [(1, 5), (5, 1)]
    assert client.post(f"/graphs/{star_id}/drill", json={"statistics": []}).status_code == 400


# -- viz ---------------------------------------------------------------------------

def test_viz_endpoint(client):
    rec = upload(client, make_graph(4, clique_pairs(4)).dump().encode(), name="k4")
    k4 = rec.json()["record"]["id"]
    viz = client.get(f"/graphs/{k4}/viz?max_nodes=100").json()
    assert viz["sampled"] is False
    assert len(viz["positions"]) == 4
    assert len(viz["edges"]) == 6
    again = client.get(f"/graphs/{k4}/viz?max_nodes=100").json()
    assert viz == again
    labeled = client.get(f"/graphs/{k4}/viz?max_nodes=100&labels=community").json()
    assert labeled["labels"]["k"] == 1
    assert client.get(f"/graphs/{k4}/viz?labels=چ").status_code == 400


# -- generate ------------------------------------------------------------------------

def test_generate_and_persist(client):
    cfg = {"kind": "pattern", "seed": 0, "wiring": "disjoint",
           "patterns": [{"pattern": "clique", "size": 5}]}
    r = client.post("/generate", json={"config": cfg, "name": "k5"})
    assert r.status_code == 201
    rec = r.json()["record"]
    assert rec["stats"]["m"] == 10
    assert rec["collection"] == "synthetic"
    assert rec["metadata"]["config"]["kind"] == "pattern"


def test_generate_preview_does_not_persist(client):
    cfg = {"kind": "block_chung_lu", "seed": 1, "block_sizes": [20, 20],
           "weights": [4.0] * 40, "mu": 0.1}
    r = client.post("/generate", json={"config": cfg, "preview": True})
    body = r.json()
    assert body["preview"] is True
    assert body["stats"]["n"] == 40
    assert body["intra_block_fraction"] is not None
    assert body["intra_block_fraction"] >= 0.7
    assert body["viz"] is not None and len(body["viz"]["positions"]) == 40
    assert client.get("/graphs").json()["graphs"] == []


def test_generate_invalid_config_400(client):
    r = client.post("/generate", json={"config": {"kind": "erdos_renyi", "n": 10, "p": 7}})
    assert r.status_code == 400
    assert "p" in r.json()["detail"]


def test_intra_block_fraction_empty():
    assert intra_block_fraction(make_graph(4, []), [2, 2]) is None


# -- query --------------------------------------------------------------------------

def test_query_endpoint(client):
    k4 = upload(client, make_graph(4, clique_pairs(4)).dump().encode(), name="k4")
    star = upload(client, make_graph(6, star_pairs(6)).dump().encode(), name="s6")
    k4_id = k4.json()["record"]["id"]
    star_id = star.json()["record"]["id"]
    r = client.post("/query", json={"predicates": [
        {"stat": "global_clustering", "min": 0.6}
    ]})
    body = r.json()
    assert body["matches"] == [k4_id]
    assert {p["id"] for p in body["points"]} == {k4_id, star_id}
    assert client.post("/query", json={"predicates": [{"stat": "zap", "min": 1}]}).status_code == 400
    assert client.post("/query", json={}).json()["matches"] == [k4_id, star_id]


# -- workspace ------------------------------------------------------------------------

def test_workspace_endpoints(client):
    r = client.post("/workspace/alice/items",
                    json={"kind": "query", "payload": {"predicates": []}})
    assert r.status_code == 201
    item = r.json()
    items = client.get("/workspace/alice/items").json()["items"]
    assert items == [item]
    assert client.delete(f"/workspace/alice/items/{item['id']}").status_code == 200
    assert client.get("/workspace/alice/items").json()["items"] == []
    assert client.delete(f"/workspace/alice/items/{item['id']}").status_code == 404
    assert client.post("/workspace/alice/items", json={"kind": "hex", "payload": 1}).status_code == 400


# -- concurrency -----------------------------------------------------------------------

def test_concurrent_ingests_stay_consistent(client):
    def one(i):
        payload = make_graph(4, clique_pairs(4)).dump().encode()
        return upload(client, payload, name=f"bulk-{i:02d}")

    with ThreadPoolExecutor(max_workers=8) as pool:
        responses = list(pool.map(one, range(20)))
    assert all(r.status_code == 201 for r in responses)
    ids = [r.json()["record"]["id"] for r in responses]
    assert len(set(ids)) == 20
    catalog = client.get("/graphs").json()["graphs"]
    assert {r["id"] for r in catalog} >= set(ids)
    for did in ids:
        assert client.get(f"/graphs/{did}").json()["stats"]["m"] == 6


# -- static frontend ---------------------------------------------------------------------

def test_frontend_mount_serves_index(tmp_path, tmp_store):
    ui = tmp_path / "ui"
    ui.mkdir()
    (ui / "index.html").write_text("<html><body>graph repo</body></html>")
    client = TestClient(create_app(tmp_store, frontend_dir=ui))
    r = client.get("/")
    assert r.status_code == 200
    assert "graph repo" in r.text
    # API routes still take precedence over the static mount
    assert client.get("/graphs").json()["graphs"] == []
