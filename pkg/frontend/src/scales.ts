/** Linear and log axis scales. Pure presentation: scales never touch data. */

export type ScaleKind = "linear" | "log";

export interface Scale {
  kind: ScaleKind;
  domain: [number, number];
  range: [number, number];
  map(x: number): number;
  invert(y: number): number;
  ticks(count?: number): number[];
}

function niceStep(span: number, count: number): number {
  const raw = span / Math.max(1, count);
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const norm = raw / mag;
  if (norm <= 1) return mag;
  if (norm <= 2) return 2 * mag;
  if (norm <= 5) return 5 * mag;
  return 10 * mag;
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1; // degenerate domains map to the range start
  return {
    kind: "linear",
    domain,
    range,
    map: (x) => r0 + ((x - d0) / span) * (r1 - r0),
    invert: (y) => d0 + ((y - r0) / (r1 - r0 || 1)) * span,
    ticks(count = 5) {
      const step = niceStep(span, count);
      const start = Math.ceil(d0 / step) * step;
      const out: number[] = [];
      for (let t = start; t <= d1 + step / 1e6; t += step) out.push(Number(t.toPrecision(12)));
      return out;
    },
  };
}

/** Log scale over positive values; non-positive domain edges are clamped. */
export function logScale(domain: [number, number], range: [number, number]): Scale {
  const lo = Math.max(domain[0], Number.MIN_VALUE);
  const hi = Math.max(domain[1], lo * 10);
  const [r0, r1] = range;
  const l0 = Math.log10(lo);
  const l1 = Math.log10(hi);
  const span = l1 - l0 || 1;
  return {
    kind: "log",
    domain: [lo, hi],
    range,
    map: (x) => r0 + ((Math.log10(Math.max(x, Number.MIN_VALUE)) - l0) / span) * (r1 - r0),
    invert: (y) => Math.pow(10, l0 + ((y - r0) / (r1 - r0 || 1)) * span),
    ticks() {
      const out: number[] = [];
      for (let e = Math.ceil(l0); e <= Math.floor(l1); e += 1) out.push(Math.pow(10, e));
      return out;
    },
  };
}

export function makeScale(kind: ScaleKind, domain: [number, number], range: [number, number]): Scale {
  return kind === "log" ? logScale(domain, range) : linearScale(domain, range);
}

/** Extent of a numeric list, ignoring nulls; [0, 1] when nothing remains. */
export function extent(values: Array<number | null | undefined>): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v === null || v === undefined || Number.isNaN(v)) continue;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo > hi) return [0, 1];
  return [lo, hi];
}
