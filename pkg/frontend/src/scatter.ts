/**
 * Scatter-plot matrix over graph-level statistics with linked brushing.
 *
 * Brushing any cell produces range predicates; the host resolves them
 * against the server (POST /query) and feeds the matched id set back via
 * `highlight`. Every cell then marks exactly that set — membership is never
 * computed client-side.
 */
import { extent, makeScale, Scale, ScaleKind } from "./scales.js";
import type { GraphPoint, Predicate } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const COLLECTION_COLORS = [
  "#4e79a7", "#f28e2c", "#e15759", "#76b7b5", "#59a14f",
  "#edc949", "#af7aa1", "#ff9da7", "#9c755f", "#bab0ab",
];

export interface ScatterOptions {
  stats: string[];
  cellSize?: number;
  padding?: number;
  xScale?: ScaleKind;
  yScale?: ScaleKind;
  /** Called with the full conjunction after any brush change. */
  onBrush: (predicates: Predicate[]) => void;
}

interface Cell {
  id: string;
  xStat: string;
  yStat: string;
  svg: SVGSVGElement;
  xScale: Scale;
  yScale: Scale;
}

function statValue(point: GraphPoint, stat: string): number | null {
  const v = (point.stats as unknown as Record<string, number | null>)[stat];
  return v === undefined ? null : v;
}

export class ScatterMatrix {
  private readonly stats: string[];
  private readonly size: number;
  private readonly pad: number;
  private readonly onBrush: (predicates: Predicate[]) => void;
  private points: GraphPoint[] = [];
  private cells: Cell[] = [];
  private brushes = new Map<string, Predicate[]>();
  private collectionColor = new Map<string, string>();
  private scaleKinds: { x: ScaleKind; y: ScaleKind };

  constructor(
    private readonly container: HTMLElement,
    options: ScatterOptions,
  ) {
    this.stats = options.stats;
    this.size = options.cellSize ?? 150;
    this.pad = options.padding ?? 24;
    this.onBrush = options.onBrush;
    this.scaleKinds = { x: options.xScale ?? "linear", y: options.yScale ?? "linear" };
  }

  setPoints(points: GraphPoint[]): void {
    this.points = points;
    this.collectionColor.clear();
    for (const p of points) {
      if (!this.collectionColor.has(p.collection)) {
        this.collectionColor.set(
          p.collection,
          COLLECTION_COLORS[this.collectionColor.size % COLLECTION_COLORS.length],
        );
      }
    }
    this.render();
  }

  setScales(x: ScaleKind, y: ScaleKind): void {
    // presentation only: re-render with new axes, the point data is untouched
    this.scaleKinds = { x, y };
    this.render();
  }

  /** Apply a brush on one cell, expressed in data coordinates. */
  applyBrush(cellId: string, xRange: [number, number], yRange: [number, number]): void {
    const cell = this.cells.find((c) => c.id === cellId);
    if (!cell) throw new Error(`unknown cell ${cellId}`);
    this.brushes.set(cellId, [
      { stat: cell.xStat, min: Math.min(...xRange), max: Math.max(...xRange) },
      { stat: cell.yStat, min: Math.min(...yRange), max: Math.max(...yRange) },
    ]);
    this.onBrush(this.activePredicates());
  }

  /** Brush a single statistic range (one-dimensional selection). */
  applyStatBrush(stat: string, min: number | null, max: number | null): void {
    if (!this.stats.includes(stat)) throw new Error(`unknown statistic ${stat}`);
    this.brushes.set(`stat:${stat}`, [{ stat, min, max }]);
    this.onBrush(this.activePredicates());
  }

  clearBrush(cellId?: string): void {
    if (cellId === undefined) this.brushes.clear();
    else this.brushes.delete(cellId);
    this.onBrush(this.activePredicates());
  }

  activePredicates(): Predicate[] {
    return [...this.brushes.values()].flat();
  }

  /**
   * Mark the server-provided match set on every cell; `null` resets all
   * points to the neutral (unbrushed) state.
   */
  highlight(ids: ReadonlySet<string> | null): void {
    for (const dot of this.container.querySelectorAll<SVGCircleElement>("circle.pt")) {
      const id = dot.getAttribute("data-id") ?? "";
      dot.classList.remove("hi", "dim");
      if (ids !== null) dot.classList.add(ids.has(id) ? "hi" : "dim");
    }
  }

  cellIds(): string[] {
    return this.cells.map((c) => c.id);
  }

  private render(): void {
    this.container.textContent = "";
    this.cells = [];
    const grid = document.createElement("div");
    grid.className = "scatter-grid";
    grid.style.display = "grid";
    grid.style.gridTemplateColumns = `repeat(${this.stats.length}, ${this.size}px)`;
    this.container.appendChild(grid);

    for (const yStat of this.stats) {
      for (const xStat of this.stats) {
        if (xStat === yStat) {
          const label = document.createElement("div");
          label.className = "scatter-label";
          label.textContent = xStat;
          grid.appendChild(label);
          continue;
        }
        grid.appendChild(this.renderCell(xStat, yStat));
      }
    }
  }

  private renderCell(xStat: string, yStat: string): SVGSVGElement {
    const svg = document.createElementNS(SVG_NS, "svg");
    const id = `${xStat}|${yStat}`;
    svg.setAttribute("width", String(this.size));
    svg.setAttribute("height", String(this.size));
    svg.setAttribute("data-cell", id);

    const xs = this.points.map((p) => statValue(p, xStat));
    const ys = this.points.map((p) => statValue(p, yStat));
    const xScale = makeScale(this.scaleKinds.x, extent(xs), [this.pad, this.size - this.pad]);
    const yScale = makeScale(this.scaleKinds.y, extent(ys), [this.size - this.pad, this.pad]);

    for (const point of this.points) {
      const x = statValue(point, xStat);
      const y = statValue(point, yStat);
      if (x === null || y === null) continue;
      const dot = document.createElementNS(SVG_NS, "circle");
      dot.setAttribute("class", "pt");
      dot.setAttribute("data-id", point.id);
      dot.setAttribute("r", "3");
      dot.setAttribute("cx", xScale.map(x).toFixed(2));
      dot.setAttribute("cy", yScale.map(y).toFixed(2));
      dot.setAttribute("fill", this.collectionColor.get(point.collection) ?? "#888");
      const label = document.createElementNS(SVG_NS, "title");
      label.textContent = `${point.name} (${point.collection})`;
      dot.appendChild(label);
      svg.appendChild(dot);
    }

    const cell: Cell = { id, xStat, yStat, svg, xScale, yScale };
    this.cells.push(cell);
    this.wireMouse(cell);
    return svg;
  }

  private wireMouse(cell: Cell): void {
    let start: [number, number] | null = null;
    const band = document.createElementNS(SVG_NS, "rect");
    band.setAttribute("class", "brush-band");
    band.setAttribute("fill", "rgba(80,120,200,0.15)");
    band.setAttribute("stroke", "rgba(80,120,200,0.6)");

    const local = (ev: MouseEvent): [number, number] => {
      const rect = cell.svg.getBoundingClientRect();
      return [ev.clientX - rect.left, ev.clientY - rect.top];
    };

    cell.svg.addEventListener("mousedown", (ev) => {
      start = local(ev);
      band.setAttribute("width", "0");
      band.setAttribute("height", "0");
      cell.svg.appendChild(band);
    });
    cell.svg.addEventListener("mousemove", (ev) => {
      if (!start) return;
      const [x, y] = local(ev);
      band.setAttribute("x", String(Math.min(x, start[0])));
      band.setAttribute("y", String(Math.min(y, start[1])));
      band.setAttribute("width", String(Math.abs(x - start[0])));
      band.setAttribute("height", String(Math.abs(y - start[1])));
    });
    cell.svg.addEventListener("mouseup", (ev) => {
      if (!start) return;
      const [x, y] = local(ev);
      const [x0, y0] = start;
      start = null;
      band.remove();
      if (Math.abs(x - x0) < 2 && Math.abs(y - y0) < 2) {
        this.clearBrush(cell.id); // a click resets this cell's brush
        return;
      }
      this.applyBrush(
        cell.id,
        [cell.xScale.invert(Math.min(x0, x)), cell.xScale.invert(Math.max(x0, x))],
        [cell.yScale.invert(Math.max(y0, y)), cell.yScale.invert(Math.min(y0, y))],
      );
    });
  }
}
