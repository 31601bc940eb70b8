/** Payload shapes mirroring the service's JSON responses. */

export interface GraphStats {
  n: number;
  m: number;
  min_degree: number;
  max_degree: number;
  mean_degree: number;
  total_triangles: number;
  global_clustering: number | null;
  mean_local_clustering: number | null;
  max_kcore: number;
  max_clique_lb: number;
  assortativity: number | null;
  components: number;
}

export interface DatasetRecord {
  id: string;
  name: string;
  collection: string;
  source: string;
  metadata: { description: string; citation: string; notes: string[]; config?: unknown };
  stats: GraphStats;
  created_at: string;
  processing: string;
}

export interface CatalogResponse {
  collections: string[];
  graphs: DatasetRecord[];
}

/** One conjunctive range filter; null bounds mean unbounded. */
export interface Predicate {
  stat: string;
  min?: number | null;
  max?: number | null;
}

export interface GraphPoint {
  id: string;
  name: string;
  collection: string;
  stats: GraphStats;
}

export interface QueryResult {
  matches: string[];
  points: GraphPoint[];
}

export interface NodeQueryResult {
  id: string;
  n: number;
  matches: number[];
  columns: Record<string, number[]>;
}

export interface Distribution {
  statistic: string;
  values: number[];
  pdf: number[];
  cdf: number[];
  ccdf: number[];
}

export interface Labeling {
  kind: "community" | "role";
  k: number;
  labels: number[];
  quality: number | null;
}

export interface VizPayload {
  id?: string;
  n: number;
  m: number;
  max_nodes: number;
  sampled: boolean;
  nodes: number[];
  positions: [number, number][];
  edges: [number, number][];
  labels?: Labeling;
}

export interface PatternSpec {
  pattern: string;
  size?: number | null;
  count?: number;
}

export interface GeneratorConfig {
  kind: string;
  seed: number;
  n?: number | null;
  p?: number | null;
  m_attach?: number | null;
  weights?: number[] | null;
  block_sizes?: number[] | null;
  mu?: number | null;
  patterns?: PatternSpec[];
  wiring?: string;
  base?: GeneratorConfig | null;
}

export interface PreviewResponse {
  preview: true;
  config: GeneratorConfig;
  stats: GraphStats;
  intra_block_fraction: number | null;
  viz: VizPayload | null;
}

export interface WorkspaceItem {
  id: string;
  kind: "query" | "graph" | "preference";
  payload: unknown;
  created_at: string;
}
