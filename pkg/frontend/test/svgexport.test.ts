import { describe, expect, it } from "vitest";
import { exportGraphSvg, svgDataUrl } from "../src/svgexport.js";
import type { VizPayload } from "../src/types.js";

function k4(): VizPayload {
  return {
    id: "k4",
    n: 4,
    m: 6,
    max_nodes: 500,
    sampled: false,
    nodes: [0, 1, 2, 3],
    positions: [
      [0, 0],
      [1, 0],
      [0, 1],
      [1, 1],
    ],
    edges: [
      [0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3],
    ],
  };
}

describe("exportGraphSvg", () => {
  it("acceptance: a K4 export contains exactly 4 node elements and 6 edge elements", () => {
    const svg = exportGraphSvg(k4());
    const doc = new DOMParser().parseFromString(svg, "image/svg+xml");
    expect(doc.querySelector("parsererror")).toBeNull();
    expect(doc.querySelectorAll("circle.node")).toHaveLength(4);
    expect(doc.querySelectorAll("line.edge")).toHaveLength(6);
  });

  it("is standalone SVG with the proper namespace and dimensions", () => {
    const svg = exportGraphSvg(k4(), { width: 300, height: 200 });
    expect(svg.startsWith('<svg xmlns="http://www.w3.org/2000/svg"')).toBe(true);
    expect(svg).toContain('width="300"');
    expect(svg).toContain('height="200"');
    expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
  });

  it("keeps every node inside the drawing area", () => {
    const svg = exportGraphSvg(k4(), { width: 100, height: 100 });
    const doc = new DOMParser().parseFromString(svg, "image/svg+xml");
    for (const node of doc.querySelectorAll("circle.node")) {
      const cx = Number(node.getAttribute("cx"));
      const cy = Number(node.getAttribute("cy"));
      expect(cx).toBeGreaterThanOrEqual(0);
      expect(cx).toBeLessThanOrEqual(100);
      expect(cy).toBeGreaterThanOrEqual(0);
      expect(cy).toBeLessThanOrEqual(100);
    }
  });

  it("edge endpoints coincide with their nodes' centers", () => {
    const payload = k4();
    const doc = new DOMParser().parseFromString(exportGraphSvg(payload), "image/svg+xml");
    const centers = [...doc.querySelectorAll("circle.node")].map((c) => [
      c.getAttribute("cx"),
      c.getAttribute("cy"),
    ]);
    const firstEdge = doc.querySelector("line.edge")!;
    const [a, b] = payload.edges[0];
    expect([firstEdge.getAttribute("x1"), firstEdge.getAttribute("y1")]).toEqual(centers[a]);
    expect([firstEdge.getAttribute("x2"), firstEdge.getAttribute("y2")]).toEqual(centers[b]);
  });

  it("colors nodes by label when a labeling is attached", () => {
    const payload = k4();
    payload.labels = { kind: "community", k: 2, labels: [0, 0, 1, 1], quality: 0.1 };
    const doc = new DOMParser().parseFromString(exportGraphSvg(payload), "image/svg+xml");
    const fills = new Set(
      [...doc.querySelectorAll("circle.node")].map((c) => c.getAttribute("fill")),
    );
    expect(fills.size).toBe(2);
  });

  it("handles an empty graph without crashing", () => {
    const svg = exportGraphSvg({
      n: 0,
      m: 0,
      max_nodes: 500,
      sampled: false,
      nodes: [],
      positions: [],
      edges: [],
    });
    const doc = new DOMParser().parseFromString(svg, "image/svg+xml");
    expect(doc.querySelectorAll("circle.node")).toHaveLength(0);
    expect(doc.querySelectorAll("line.edge")).toHaveLength(0);
  });

  it("escapes the dataset id in the title", () => {
    const payload = { ...k4(), id: 'a<b>&"c' };
    const svg = exportGraphSvg(payload);
    expect(svg).toContain("<title>a&lt;b&gt;&amp;&quot;c</title>");
  });

  it("svgDataUrl produces an inline image URL", () => {
    const url = svgDataUrl(exportGraphSvg(k4()));
    expect(url.startsWith("data:image/svg+xml;charset=utf-8,")).toBe(true);
    expect(decodeURIComponent(url.split(",")[1])).toContain('circle class="node"');
  });
});
