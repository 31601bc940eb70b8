/**
 * Interactive generator panel.
 *
 * Edits to the form are validated locally first; only configs that satisfy
 * the generator invariants are sent to the preview endpoint, debounced so a
 * slider drag produces one request, with stale responses discarded
 * (latest-wins). The readout reports node/edge counts and, for the block
 * model, the fraction of edges that stay inside a block.
 */
import { debounce } from "./debounce.js";
import type { DatasetRecord, GeneratorConfig, PreviewResponse } from "./types.js";

export interface GeneratorApi {
  previewGenerate(config: GeneratorConfig): Promise<PreviewResponse>;
  saveGenerate(config: GeneratorConfig, name: string): Promise<{ record: DatasetRecord }>;
}

export interface GeneratorPanelOptions {
  api: GeneratorApi;
  debounceMs?: number;
  onPreview?: (response: PreviewResponse) => void;
  onSave?: (record: DatasetRecord) => void;
}

export type GeneratorKind = "erdos_renyi" | "preferential_attachment" | "block_chung_lu";

interface FieldSpec {
  name: string;
  label: string;
  value: string;
  input?: "range" | "number" | "text";
  min?: number;
  max?: number;
  step?: number;
}

const FORMS: Record<GeneratorKind, FieldSpec[]> = {
  erdos_renyi: [
    { name: "n", label: "nodes", value: "100", input: "number", min: 0 },
    { name: "p", label: "edge probability", value: "0.05", input: "range", min: 0, max: 1, step: 0.01 },
  ],
  preferential_attachment: [
    { name: "n", label: "nodes", value: "200", input: "number", min: 3 },
    { name: "m_attach", label: "edges per new node", value: "2", input: "number", min: 1 },
  ],
  block_chung_lu: [
    { name: "block_sizes", label: "block sizes", value: "25,25,25,25", input: "text" },
    { name: "mean_degree", label: "mean degree", value: "6", input: "number", min: 0, step: 0.5 },
    { name: "mu", label: "mixing (mu)", value: "0.1", input: "range", min: 0, max: 1, step: 0.01 },
  ],
};

/** Parse + validate the raw form values; returns a config or a message. */
export function buildConfig(
  kind: GeneratorKind,
  raw: Record<string, string>,
  seed: number,
): { config: GeneratorConfig } | { error: string } {
  if (kind === "erdos_renyi") {
    const n = Number(raw.n);
    const p = Number(raw.p);
    if (!Number.isInteger(n) || n < 0) return { error: "nodes must be a whole number >= 0" };
    if (!Number.isFinite(p) || p < 0 || p > 1) return { error: "edge probability must be in [0, 1]" };
    return { config: { kind, seed, n, p } };
  }
  if (kind === "preferential_attachment") {
    const n = Number(raw.n);
    const m = Number(raw.m_attach);
    if (!Number.isInteger(m) || m < 1) return { error: "edges per new node must be a whole number >= 1" };
    if (!Number.isInteger(n) || n < m + 2) return { error: `nodes must be a whole number >= ${m + 2}` };
    return { config: { kind, seed, n, m_attach: m } };
  }
  const sizes = raw.block_sizes
    .split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0)
    .map(Number);
  if (sizes.length === 0 || sizes.some((s) => !Number.isInteger(s) || s < 1)) {
    return { error: "block sizes must be comma-separated whole numbers >= 1" };
  }
  const w = Number(raw.mean_degree);
  if (!Number.isFinite(w) || w < 0) return { error: "mean degree must be >= 0" };
  const mu = Number(raw.mu);
  if (!Number.isFinite(mu) || mu < 0 || mu > 1) return { error: "mixing mu must be in [0, 1]" };
  const total = sizes.reduce((a, b) => a + b, 0);
  return {
    config: {
      kind,
      seed,
      block_sizes: sizes,
      weights: new Array<number>(total).fill(w),
      mu,
    },
  };
}

export class GeneratorPanel {
  private readonly api: GeneratorApi;
  private readonly onPreview?: (response: PreviewResponse) => void;
  private readonly onSave?: (record: DatasetRecord) => void;
  private readonly schedulePreview: (() => void) & { cancel(): void };
  private kind: GeneratorKind = "block_chung_lu";
  private seed = 0;
  private requestToken = 0;
  private fieldBox!: HTMLDivElement;
  private errorBox!: HTMLDivElement;
  private readoutBox!: HTMLDivElement;

  constructor(
    private readonly container: HTMLElement,
    options: GeneratorPanelOptions,
  ) {
    this.api = options.api;
    this.onPreview = options.onPreview;
    this.onSave = options.onSave;
    this.schedulePreview = debounce(() => void this.requestPreview(), options.debounceMs ?? 250);
    this.render();
  }

  setKind(kind: GeneratorKind): void {
    this.kind = kind;
    this.schedulePreview.cancel();
    this.renderFields();
    this.handleEdit();
  }

  setSeed(seed: number): void {
    this.seed = seed;
    this.handleEdit();
  }

  /** Programmatic equivalent of typing/dragging a form control. */
  setField(name: string, value: string): void {
    const input = this.fieldInput(name);
    input.value = value;
    input.dispatchEvent(new Event("input", { bubbles: true }));
  }

  fieldInput(name: string): HTMLInputElement {
    const input = this.fieldBox.querySelector<HTMLInputElement>(`input[name="${name}"]`);
    if (!input) throw new Error(`no field named ${name}`);
    return input;
  }

  currentConfig(): { config: GeneratorConfig } | { error: string } {
    const raw: Record<string, string> = {};
    for (const input of this.fieldBox.querySelectorAll<HTMLInputElement>("input[name]")) {
      raw[input.name] = input.value;
    }
    return buildConfig(this.kind, raw, this.seed);
  }

  errorText(): string {
    return this.errorBox.textContent ?? "";
  }

  readoutText(): string {
    return this.readoutBox.textContent ?? "";
  }

  async save(name: string): Promise<DatasetRecord | null> {
    const built = this.currentConfig();
    if ("error" in built) {
      this.errorBox.textContent = built.error;
      return null;
    }
    const { record } = await this.api.saveGenerate(built.config, name);
    this.onSave?.(record);
    return record;
  }

  private render(): void {
    this.container.textContent = "";
    const form = document.createElement("form");
    form.className = "gen-form";
    form.addEventListener("submit", (ev) => ev.preventDefault());

    const kindSelect = document.createElement("select");
    kindSelect.name = "kind";
    for (const kind of Object.keys(FORMS)) {
      const opt = document.createElement("option");
      opt.value = kind;
      opt.textContent = kind.replaceAll("_", " ");
      kindSelect.appendChild(opt);
    }
    kindSelect.value = this.kind;
    kindSelect.addEventListener("change", () => this.setKind(kindSelect.value as GeneratorKind));
    form.appendChild(kindSelect);

    this.fieldBox = document.createElement("div");
    this.fieldBox.className = "gen-fields";
    form.appendChild(this.fieldBox);

    this.errorBox = document.createElement("div");
    this.errorBox.className = "gen-error";
    form.appendChild(this.errorBox);

    this.readoutBox = document.createElement("div");
    this.readoutBox.className = "gen-readout";
    form.appendChild(this.readoutBox);

    this.container.appendChild(form);
    this.renderFields();
  }

  private renderFields(): void {
    this.fieldBox.textContent = "";
    for (const spec of FORMS[this.kind]) {
      const row = document.createElement("label");
      row.className = "gen-row";
      const caption = document.createElement("span");
      caption.textContent = spec.label;
      row.appendChild(caption);

      const input = document.createElement("input");
      input.name = spec.name;
      input.type = spec.input ?? "text";
      if (spec.min !== undefined) input.min = String(spec.min);
      if (spec.max !== undefined) input.max = String(spec.max);
      if (spec.step !== undefined) input.step = String(spec.step);
      input.value = spec.value;
      input.addEventListener("input", () => this.handleEdit());
      row.appendChild(input);
      this.fieldBox.appendChild(row);
    }
  }

  private handleEdit(): void {
    const built = this.currentConfig();
    if ("error" in built) {
      // invalid input never reaches the server
      this.errorBox.textContent = built.error;
      this.schedulePreview.cancel();
      return;
    }
    this.errorBox.textContent = "";
    this.schedulePreview();
  }

  private async requestPreview(): Promise<void> {
    const built = this.currentConfig();
    if ("error" in built) return;
    const token = ++this.requestToken;
    try {
      const response = await this.api.previewGenerate(built.config);
      if (token !== this.requestToken) return; // a newer edit superseded us
      const intra =
        response.intra_block_fraction === null
          ? "n/a"
          : response.intra_block_fraction.toFixed(3);
      this.readoutBox.textContent =
        `n=${response.stats.n} m=${response.stats.m} intra-block fraction=${intra}`;
      this.onPreview?.(response);
    } catch (err) {
      if (token !== this.requestToken) return;
      this.errorBox.textContent = err instanceof Error ? err.message : String(err);
    }
  }
}
