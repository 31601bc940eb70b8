/**
 * Canvas node-link view for a layout payload served by the graph API.
 *
 * The payload's positions are treated as immutable data; pan/zoom only
 * adjust a view transform that is applied at draw time. A `sampled` payload
 * gets a visible badge so reduced previews are never mistaken for the full
 * graph.
 */
import type { Labeling, VizPayload } from "./types.js";

export const LABEL_COLORS = [
  "#4e79a7", "#f28e2c", "#e15759", "#76b7b5", "#59a14f",
  "#edc949", "#af7aa1", "#ff9da7", "#9c755f", "#bab0ab",
];

/** The subset of CanvasRenderingContext2D the view draws with. */
export interface DrawContext {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  stroke(): void;
  fillText(text: string, x: number, y: number): void;
  strokeStyle: string;
  fillStyle: string;
  lineWidth: number;
  font: string;
}

export interface GraphViewOptions {
  width?: number;
  height?: number;
  nodeRadius?: number;
  /** Test seam: supply a recording context instead of canvas.getContext. */
  context?: DrawContext;
}

interface Transform {
  scale: number;
  tx: number;
  ty: number;
}

export class GraphView {
  private readonly ctx: DrawContext;
  private readonly width: number;
  private readonly height: number;
  private readonly radius: number;
  private payload: VizPayload | null = null;
  private labeling: Labeling | null = null;
  private transform: Transform = { scale: 1, tx: 0, ty: 0 };
  private fitted: Transform = { scale: 1, tx: 0, ty: 0 };

  constructor(canvas: HTMLCanvasElement, options: GraphViewOptions = {}) {
    this.width = options.width ?? canvas.width ?? 600;
    this.height = options.height ?? canvas.height ?? 400;
    this.radius = options.nodeRadius ?? 4;
    canvas.width = this.width;
    canvas.height = this.height;
    const ctx = options.context ?? (canvas.getContext("2d") as DrawContext | null);
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
  }

  setPayload(payload: VizPayload, labeling: Labeling | null = null): void {
    this.payload = payload;
    this.labeling = labeling;
    this.fitted = this.fitTransform(payload);
    this.transform = { ...this.fitted };
    this.draw();
  }

  setLabeling(labeling: Labeling | null): void {
    this.labeling = labeling;
    this.draw();
  }

  zoom(factor: number, center?: [number, number]): void {
    const [cx, cy] = center ?? [this.width / 2, this.height / 2];
    const t = this.transform;
    const scale = t.scale * factor;
    // keep the data point under (cx, cy) fixed while rescaling
    this.transform = {
      scale,
      tx: cx - (cx - t.tx) * factor,
      ty: cy - (cy - t.ty) * factor,
    };
    this.draw();
  }

  pan(dx: number, dy: number): void {
    this.transform = { ...this.transform, tx: this.transform.tx + dx, ty: this.transform.ty + dy };
    this.draw();
  }

  resetView(): void {
    this.transform = { ...this.fitted };
    this.draw();
  }

  /** Screen coordinates of every node under the current transform. */
  screenPositions(): [number, number][] {
    if (!this.payload) return [];
    return this.payload.positions.map(([x, y]) => this.toScreen(x, y));
  }

  /** Hit-test: index into payload.nodes of the node at (x, y), or null. */
  nodeAt(x: number, y: number): number | null {
    if (!this.payload) return null;
    const rr = (this.radius + 2) ** 2;
    for (let i = this.payload.positions.length - 1; i >= 0; i--) {
      const [sx, sy] = this.toScreen(...this.payload.positions[i]);
      if ((sx - x) ** 2 + (sy - y) ** 2 <= rr) return i;
    }
    return null;
  }

  nodeColor(index: number): string {
    if (!this.labeling) return "#4e79a7";
    const label = this.labeling.labels[index] ?? 0;
    return LABEL_COLORS[label % LABEL_COLORS.length];
  }

  draw(): void {
    const ctx = this.ctx;
    ctx.clearRect(0, 0, this.width, this.height);
    if (!this.payload) return;

    ctx.strokeStyle = "#b0b8c4";
    ctx.lineWidth = 1;
    for (const [a, b] of this.payload.edges) {
      const [x0, y0] = this.toScreen(...this.payload.positions[a]);
      const [x1, y1] = this.toScreen(...this.payload.positions[b]);
      ctx.beginPath();
      ctx.moveTo(x0, y0);
      ctx.lineTo(x1, y1);
      ctx.stroke();
    }

    for (let i = 0; i < this.payload.positions.length; i++) {
      const [x, y] = this.toScreen(...this.payload.positions[i]);
      ctx.fillStyle = this.nodeColor(i);
      ctx.beginPath();
      ctx.arc(x, y, this.radius, 0, Math.PI * 2);
      ctx.fill();
    }

    if (this.payload.sampled) {
      ctx.fillStyle = "#7a5200";
      ctx.font = "12px sans-serif";
      ctx.fillText(
        `sampled: showing ${this.payload.positions.length} of ${this.payload.n} nodes`,
        8,
        16,
      );
    }
  }

  private toScreen(x: number, y: number): [number, number] {
    const t = this.transform;
    return [x * t.scale + t.tx, y * t.scale + t.ty];
  }

  private fitTransform(payload: VizPayload): Transform {
    if (payload.positions.length === 0) return { scale: 1, tx: this.width / 2, ty: this.height / 2 };
    let [minX, minY] = payload.positions[0];
    let [maxX, maxY] = payload.positions[0];
    for (const [x, y] of payload.positions) {
      minX = Math.min(minX, x);
      maxX = Math.max(maxX, x);
      minY = Math.min(minY, y);
      maxY = Math.max(maxY, y);
    }
    const margin = 2.5 * this.radius + 6;
    const spanX = Math.max(maxX - minX, 1e-9);
    const spanY = Math.max(maxY - minY, 1e-9);
    const scale = Math.min(
      (this.width - 2 * margin) / spanX,
      (this.height - 2 * margin) / spanY,
    );
    return {
      scale,
      tx: (this.width - scale * (minX + maxX)) / 2,
      ty: (this.height - scale * (minY + maxY)) / 2,
    };
  }
}
