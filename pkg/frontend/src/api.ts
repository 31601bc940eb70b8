/**
 * Thin typed client over the repository service.
 *
 * All view components receive an ApiClient rather than calling fetch
 * directly, so tests can stub the transport and the whole UI honors the
 * single-source-of-truth rule: membership and stats always come from the
 * server, never from client-side recomputation.
 */
import type {
  CatalogResponse,
  DatasetRecord,
  Distribution,
  GeneratorConfig,
  NodeQueryResult,
  Predicate,
  PreviewResponse,
  QueryResult,
  VizPayload,
  WorkspaceItem,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function parseResponse<T>(res: Response): Promise<T> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = (await res.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private get<T>(path: string): Promise<T> {
    return this.fetchFn(this.base + path).then((res) => parseResponse<T>(res));
  }

  private send<T>(method: string, path: string, body?: unknown): Promise<T> {
    return this.fetchFn(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    }).then((res) => parseResponse<T>(res));
  }

  listGraphs(): Promise<CatalogResponse> {
    return this.get("/graphs");
  }

  getGraph(id: string): Promise<DatasetRecord> {
    return this.get(`/graphs/${encodeURIComponent(id)}`);
  }

  /** Conjunctive range query over graph-level statistics. */
  queryGraphs(predicates: Predicate[]): Promise<QueryResult> {
    return this.send("POST", "/query", { predicates });
  }

  queryNodes(id: string, predicates: Predicate[], columns: string[] = []): Promise<NodeQueryResult> {
    const params = new URLSearchParams();
    for (const p of predicates) {
      if (p.min !== undefined && p.min !== null) params.set(`${p.stat}.min`, String(p.min));
      if (p.max !== undefined && p.max !== null) params.set(`${p.stat}.max`, String(p.max));
    }
    if (columns.length) params.set("columns", columns.join(","));
    const qs = params.toString();
    return this.get(`/graphs/${encodeURIComponent(id)}/nodes${qs ? "?" + qs : ""}`);
  }

  getDistribution(id: string, statistic: string): Promise<Distribution> {
    return this.get(`/graphs/${encodeURIComponent(id)}/distribution/${encodeURIComponent(statistic)}`);
  }

  getViz(id: string, maxNodes?: number, labels?: "community" | "role"): Promise<VizPayload> {
    const params = new URLSearchParams();
    if (maxNodes !== undefined) params.set("max_nodes", String(maxNodes));
    if (labels) params.set("labels", labels);
    const qs = params.toString();
    return this.get(`/graphs/${encodeURIComponent(id)}/viz${qs ? "?" + qs : ""}`);
  }

  previewGenerate(config: GeneratorConfig): Promise<PreviewResponse> {
    return this.send("POST", "/generate", { config, preview: true });
  }

  saveGenerate(config: GeneratorConfig, name: string): Promise<{ record: DatasetRecord }> {
    return this.send("POST", "/generate", { config, name });
  }

  listWorkspace(key: string): Promise<{ items: WorkspaceItem[] }> {
    return this.get(`/workspace/${encodeURIComponent(key)}/items`);
  }

  saveWorkspaceItem(key: string, kind: WorkspaceItem["kind"], payload: unknown): Promise<WorkspaceItem> {
    return this.send("POST", `/workspace/${encodeURIComponent(key)}/items`, { kind, payload });
  }

  deleteWorkspaceItem(key: string, itemId: string): Promise<{ deleted: string }> {
    return this.send("DELETE", `/workspace/${encodeURIComponent(key)}/items/${encodeURIComponent(itemId)}`);
  }

  downloadUrl(id: string): string {
    return `${this.base}/graphs/${encodeURIComponent(id)}/download`;
  }
}
