import { beforeEach, describe, expect, it } from "vitest";
import { DrawContext, GraphView } from "../src/graphview.js";
import type { VizPayload } from "../src/types.js";

/** Records every draw call so tests can count primitives. */
class RecordingContext implements DrawContext {
  ops: Array<{ op: string; args: unknown[] }> = [];
  strokeStyle = "";
  fillStyle = "";
  lineWidth = 1;
  font = "";

  private log(op: string, ...args: unknown[]): void {
    this.ops.push({ op, args });
  }

  clearRect(...args: unknown[]): void {
    this.ops = []; // a clear starts a fresh frame
    this.log("clearRect", ...args);
  }
  beginPath(): void {
    this.log("beginPath");
  }
  moveTo(...args: unknown[]): void {
    this.log("moveTo", ...args);
  }
  lineTo(...args: unknown[]): void {
    this.log("lineTo", ...args);
  }
  arc(...args: unknown[]): void {
    this.log("arc", ...args);
  }
  fill(): void {
    this.log("fill", this.fillStyle);
  }
  stroke(): void {
    this.log("stroke");
  }
  fillText(...args: unknown[]): void {
    this.log("fillText", ...args);
  }

  count(op: string): number {
    return this.ops.filter((o) => o.op === op).length;
  }
}

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

function makeView(): { view: GraphView; ctx: RecordingContext } {
  const canvas = document.createElement("canvas");
  const ctx = new RecordingContext();
  const view = new GraphView(canvas, { width: 200, height: 200, context: ctx });
  return { view, ctx };
}

describe("GraphView drawing", () => {
  let view: GraphView;
  let ctx: RecordingContext;
  beforeEach(() => {
    ({ view, ctx } = makeView());
  });

  it("draws one circle per node and one segment per edge for K4", () => {
    view.setPayload(k4());
    expect(ctx.count("arc")).toBe(4);
    expect(ctx.count("lineTo")).toBe(6);
    expect(ctx.count("moveTo")).toBe(6);
  });

  it("keeps all nodes inside the canvas after the initial fit", () => {
    view.setPayload(k4());
    for (const [x, y] of view.screenPositions()) {
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThanOrEqual(200);
      expect(y).toBeGreaterThanOrEqual(0);
      expect(y).toBeLessThanOrEqual(200);
    }
  });

  it("colors nodes by community label", () => {
    const payload: VizPayload = {
      ...k4(),
      n: 10,
      nodes: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
      positions: Array.from({ length: 10 }, (_, i) => [i % 5, Math.floor(i / 5)] as [number, number]),
      edges: [],
      labels: { kind: "community", k: 2, labels: [0, 0, 0, 0, 0, 1, 1, 1, 1, 1], quality: 0.35 },
    };
    view.setPayload(payload, payload.labels!);
    const fills = new Set(ctx.ops.filter((o) => o.op === "fill").map((o) => o.args[0]));
    expect(fills.size).toBe(2);
  });

  it("shows a sampling badge only for reduced payloads", () => {
    view.setPayload({ ...k4(), sampled: false });
    expect(ctx.count("fillText")).toBe(0);

    view.setPayload({ ...k4(), n: 5000, sampled: true });
    expect(ctx.count("fillText")).toBe(1);
    const text = String(ctx.ops.find((o) => o.op === "fillText")!.args[0]);
    expect(text).toContain("4 of 5000");
  });

  it("hit-tests nodes in screen space", () => {
    view.setPayload(k4());
    const [x, y] = view.screenPositions()[2];
    expect(view.nodeAt(x, y)).toBe(2);
    expect(view.nodeAt(x + 30, y + 30)).not.toBe(2);
  });
});

describe("GraphView view transform", () => {
  it("zoom then reset restores the exact original projection", () => {
    const { view } = makeView();
    view.setPayload(k4());
    const before = view.screenPositions();

    view.zoom(2.0, [10, 20]);
    view.pan(15, -7);
    view.zoom(0.5);
    expect(view.screenPositions()).not.toEqual(before);

    view.resetView();
    const after = view.screenPositions();
    for (let i = 0; i < before.length; i++) {
      expect(after[i][0]).toBe(before[i][0]); // bit-identical, not approximate
      expect(after[i][1]).toBe(before[i][1]);
    }
  });

  it("never mutates the payload positions", () => {
    const { view } = makeView();
    const payload = k4();
    const snapshot = JSON.parse(JSON.stringify(payload.positions)) as [number, number][];
    view.setPayload(payload);
    view.zoom(3, [50, 50]);
    view.pan(100, 100);
    view.resetView();
    view.zoom(0.1);
    expect(payload.positions).toEqual(snapshot);
  });

  it("zoom keeps the anchor point fixed", () => {
    const { view } = makeView();
    view.setPayload(k4());
    const anchor = view.screenPositions()[0];
    view.zoom(2, anchor);
    const after = view.screenPositions()[0];
    expect(after[0]).toBeCloseTo(anchor[0], 9);
    expect(after[1]).toBeCloseTo(anchor[1], 9);
  });

  it("renders a single-node payload at the canvas center", () => {
    const { view } = makeView();
    view.setPayload({
      id: "dot",
      n: 1,
      m: 0,
      max_nodes: 500,
      sampled: false,
      nodes: [0],
      positions: [[0, 0]],
      edges: [],
    });
    const [[x, y]] = view.screenPositions();
    expect(x).toBeCloseTo(100, 6);
    expect(y).toBeCloseTo(100, 6);
  });
});
