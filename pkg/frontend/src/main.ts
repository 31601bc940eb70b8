/**
 * Application bootstrap: wires the catalog scatter matrix, detail panels,
 * and generator workbench against the HTTP API. All brushing selection
 * state flows server → SelectionStore → views.
 */
import { ApiClient } from "./api.js";
import { DistPlot, SeriesKind } from "./distplot.js";
import { GeneratorPanel } from "./generator.js";
import { GraphView } from "./graphview.js";
import { ScatterMatrix } from "./scatter.js";
import { exportGraphSvg, svgDataUrl } from "./svgexport.js";
import { SelectionStore, ViewStateStore } from "./state.js";
import type { ScaleKind } from "./scales.js";
import type { GraphPoint, VizPayload } from "./types.js";

const SCATTER_STATS = ["n", "m", "global_clustering", "max_kcore"];

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

export function bootstrap(root: Document = document): void {
  const api = new ApiClient("");
  const selection = new SelectionStore();
  const viewState = new ViewStateStore();

  const scatter = new ScatterMatrix(byId("scatter"), {
    stats: SCATTER_STATS,
    onBrush: (predicates) => {
      if (predicates.length === 0) {
        selection.clear();
        return;
      }
      void api.queryGraphs(predicates).then((result) => {
        selection.setFromServer("scatter", predicates, result.matches);
      });
    },
  });

  selection.subscribe((sel) => {
    const idle = sel.predicates.length === 0;
    scatter.highlight(idle ? null : sel.matched);
    const status = byId<HTMLElement>("selection-status");
    status.textContent = idle ? "no selection" : `${sel.matched.size} graphs match`;
  });

  const graphCanvas = byId<HTMLCanvasElement>("graph-canvas");
  const graphView = new GraphView(graphCanvas, { width: 640, height: 420 });
  const distPlot = new DistPlot(byId("dist-plot"));
  let currentViz: VizPayload | null = null;

  const loadDataset = async (id: string): Promise<void> => {
    const [viz, dist] = await Promise.all([
      api.getViz(id, undefined, "community"),
      api.getDistribution(id, "degree"),
    ]);
    currentViz = viz;
    graphView.setPayload(viz, viz.labels ?? null);
    distPlot.setDistribution(dist);
  };

  const catalogList = byId<HTMLUListElement>("catalog-list");
  void api.listGraphs().then(({ graphs }) => {
    const points: GraphPoint[] = graphs.map((g) => ({
      id: g.id,
      name: g.name,
      collection: g.collection,
      stats: g.stats,
    }));
    scatter.setPoints(points);
    catalogList.textContent = "";
    for (const g of graphs) {
      const item = root.createElement("li");
      const link = root.createElement("a");
      link.href = "#";
      link.textContent = `${g.name} (n=${g.stats.n}, m=${g.stats.m})`;
      link.addEventListener("click", (ev) => {
        ev.preventDefault();
        void loadDataset(g.id);
      });
      item.appendChild(link);
      catalogList.appendChild(item);
    }
  });

  byId<HTMLSelectElement>("series-select").addEventListener("change", (ev) => {
    distPlot.setSeries((ev.target as HTMLSelectElement).value as SeriesKind);
  });
  byId<HTMLSelectElement>("axis-select").addEventListener("change", (ev) => {
    const [x, y] = (ev.target as HTMLSelectElement).value.split("/") as [ScaleKind, ScaleKind];
    viewState.update({ xScale: x, yScale: y });
  });
  viewState.subscribe((vs) => {
    distPlot.setScales(vs.xScale, vs.yScale);
    scatter.setScales(vs.xScale, vs.yScale);
  });

  byId<HTMLButtonElement>("zoom-in").addEventListener("click", () => graphView.zoom(1.25));
  byId<HTMLButtonElement>("zoom-out").addEventListener("click", () => graphView.zoom(0.8));
  byId<HTMLButtonElement>("reset-view").addEventListener("click", () => graphView.resetView());

  byId<HTMLAnchorElement>("export-svg").addEventListener("click", (ev) => {
    const anchor = ev.currentTarget as HTMLAnchorElement;
    if (!currentViz) {
      ev.preventDefault();
      return;
    }
    anchor.href = svgDataUrl(exportGraphSvg(currentViz));
    anchor.download = `${currentViz.id ?? "graph"}.svg`;
  });

  const previewCanvas = byId<HTMLCanvasElement>("preview-canvas");
  const previewView = new GraphView(previewCanvas, { width: 420, height: 320 });
  const panel = new GeneratorPanel(byId("generator-panel"), {
    api,
    onPreview: (response) => {
      if (response.viz) previewView.setPayload(response.viz, response.viz.labels ?? null);
    },
  });
  byId<HTMLButtonElement>("save-generated").addEventListener("click", () => {
    const name = byId<HTMLInputElement>("save-name").value.trim() || "generated";
    void panel.save(name);
  });
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  bootstrap();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", () => bootstrap());
}
