/**
 * Standalone SVG export of a layout payload: one `<line class="edge">` per
 * edge and one `<circle class="node">` per node, so the exported figure is
 * usable outside the app (papers, slides) without any runtime.
 */
import { LABEL_COLORS } from "./graphview.js";
import type { VizPayload } from "./types.js";

export interface SvgExportOptions {
  width?: number;
  height?: number;
  nodeRadius?: number;
  margin?: number;
}

function escapeXml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function exportGraphSvg(payload: VizPayload, options: SvgExportOptions = {}): string {
  const width = options.width ?? 600;
  const height = options.height ?? 600;
  const radius = options.nodeRadius ?? 5;
  const margin = options.margin ?? radius + 8;

  let minX = 0;
  let maxX = 1;
  let minY = 0;
  let maxY = 1;
  if (payload.positions.length > 0) {
    minX = Math.min(...payload.positions.map((p) => p[0]));
    maxX = Math.max(...payload.positions.map((p) => p[0]));
    minY = Math.min(...payload.positions.map((p) => p[1]));
    maxY = Math.max(...payload.positions.map((p) => p[1]));
  }
  const spanX = Math.max(maxX - minX, 1e-9);
  const spanY = Math.max(maxY - minY, 1e-9);
  const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
  const sx = (x: number) => ((x - (minX + maxX) / 2) * scale + width / 2).toFixed(2);
  const sy = (y: number) => ((y - (minY + maxY) / 2) * scale + height / 2).toFixed(2);

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
  ];
  if (payload.id) {
    parts.push(`<title>${escapeXml(payload.id)}</title>`);
  }

  for (const [a, b] of payload.edges) {
    const [x0, y0] = payload.positions[a];
    const [x1, y1] = payload.positions[b];
    parts.push(
      `<line class="edge" x1="${sx(x0)}" y1="${sy(y0)}" x2="${sx(x1)}" y2="${sy(y1)}" ` +
        `stroke="#9aa5b1" stroke-width="1"/>`,
    );
  }

  const labels = payload.labels?.labels;
  for (let i = 0; i < payload.positions.length; i++) {
    const [x, y] = payload.positions[i];
    const fill = labels ? LABEL_COLORS[(labels[i] ?? 0) % LABEL_COLORS.length] : "#4e79a7";
    parts.push(
      `<circle class="node" cx="${sx(x)}" cy="${sy(y)}" r="${radius}" ` +
        `fill="${fill}" data-node="${payload.nodes[i]}"/>`,
    );
  }

  parts.push("</svg>");
  return parts.join("\n");
}

/** Wrap the SVG text in a Blob URL suitable for a download link. */
export function svgDataUrl(svg: string): string {
  return `data:image/svg+xml;charset=utf-8,${encodeURIComponent(svg)}`;
}
