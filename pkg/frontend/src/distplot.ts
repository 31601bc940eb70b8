/**
 * Distribution plot: renders the pdf/cdf/ccdf series of a statistic
 * distribution exactly as served — the client switches between the three
 * precomputed series and rescales axes, but never recomputes probabilities.
 */
import { extent, makeScale, ScaleKind } from "./scales.js";
import type { Distribution } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export type SeriesKind = "pdf" | "cdf" | "ccdf";

export interface DistPlotOptions {
  width?: number;
  height?: number;
  padding?: number;
}

export class DistPlot {
  private readonly width: number;
  private readonly height: number;
  private readonly pad: number;
  private dist: Distribution | null = null;
  private series: SeriesKind = "pdf";
  private xKind: ScaleKind = "linear";
  private yKind: ScaleKind = "linear";

  constructor(
    private readonly container: HTMLElement,
    options: DistPlotOptions = {},
  ) {
    this.width = options.width ?? 420;
    this.height = options.height ?? 280;
    this.pad = options.padding ?? 36;
  }

  setDistribution(dist: Distribution | null): void {
    this.dist = dist;
    this.render();
  }

  setSeries(series: SeriesKind): void {
    this.series = series;
    this.render();
  }

  setScales(x: ScaleKind, y: ScaleKind): void {
    this.xKind = x;
    this.yKind = y;
    this.render();
  }

  currentSeries(): SeriesKind {
    return this.series;
  }

  /** The (value, probability) pairs currently plotted, verbatim from the payload. */
  points(): [number, number][] {
    if (!this.dist) return [];
    const ys = this.dist[this.series];
    return this.dist.values.map((v, i) => [v, ys[i]]);
  }

  render(): void {
    this.container.textContent = "";
    if (!this.dist || this.dist.values.length === 0) {
      const empty = document.createElement("div");
      empty.className = "dist-empty";
      empty.textContent = "no data";
      this.container.appendChild(empty);
      return;
    }

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("width", String(this.width));
    svg.setAttribute("height", String(this.height));
    svg.setAttribute("data-series", this.series);
    svg.setAttribute("data-xscale", this.xKind);
    svg.setAttribute("data-yscale", this.yKind);

    const pts = this.points();
    const xScale = makeScale(this.xKind, extent(pts.map((p) => p[0])), [
      this.pad,
      this.width - this.pad,
    ]);
    const yScale = makeScale(this.yKind, extent(pts.map((p) => p[1])), [
      this.height - this.pad,
      this.pad,
    ]);

    for (const tick of xScale.ticks()) {
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("class", "tick tick-x");
      text.setAttribute("x", xScale.map(tick).toFixed(1));
      text.setAttribute("y", String(this.height - this.pad / 3));
      text.textContent = String(tick);
      svg.appendChild(text);
    }
    for (const tick of yScale.ticks()) {
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("class", "tick tick-y");
      text.setAttribute("x", "2");
      text.setAttribute("y", yScale.map(tick).toFixed(1));
      text.textContent = String(tick);
      svg.appendChild(text);
    }

    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("class", "series");
    path.setAttribute("fill", "none");
    path.setAttribute("stroke", "#4e79a7");
    path.setAttribute(
      "d",
      pts
        .map(([x, y], i) => `${i === 0 ? "M" : "L"}${xScale.map(x).toFixed(2)},${yScale.map(y).toFixed(2)}`)
        .join(" "),
    );
    svg.appendChild(path);

    for (const [x, y] of pts) {
      const dot = document.createElementNS(SVG_NS, "circle");
      dot.setAttribute("class", "dist-pt");
      dot.setAttribute("r", "3");
      dot.setAttribute("cx", xScale.map(x).toFixed(2));
      dot.setAttribute("cy", yScale.map(y).toFixed(2));
      dot.setAttribute("data-value", String(x));
      dot.setAttribute("data-p", String(y));
      svg.appendChild(dot);
    }

    this.container.appendChild(svg);
  }
}
