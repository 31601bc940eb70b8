/**
 * Shared UI state: the active selection (always server-derived) and
 * per-plot view settings (pure presentation).
 */
import type { Predicate } from "./types.js";
import type { ScaleKind } from "./scales.js";

export type Listener<T> = (value: T) => void;

class Store<T> {
  private listeners: Listener<T>[] = [];

  constructor(protected value: T) {}

  get(): T {
    return this.value;
  }

  subscribe(fn: Listener<T>): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  protected emit(): void {
    for (const fn of this.listeners) fn(this.value);
  }
}

export interface Selection {
  /** Plot that initiated the brush, "" when idle. */
  origin: string;
  /** Conjunction of active range filters. */
  predicates: Predicate[];
  /** Matched ids as returned by the server for `predicates`. */
  matched: ReadonlySet<string>;
}

const EMPTY: Selection = { origin: "", predicates: [], matched: new Set() };

export class SelectionStore extends Store<Selection> {
  constructor() {
    super(EMPTY);
  }

  /**
   * Install a server query result. The matched set is taken verbatim from
   * the response — the client never recomputes membership.
   */
  setFromServer(origin: string, predicates: Predicate[], matches: string[]): void {
    this.value = { origin, predicates, matched: new Set(matches) };
    this.emit();
  }

  clear(): void {
    this.value = EMPTY;
    this.emit();
  }

  isEmpty(): boolean {
    return this.value.predicates.length === 0;
  }
}

export type ColorBy = "collection" | "community" | "role" | "statistic";

export interface ViewState {
  xScale: ScaleKind;
  yScale: ScaleKind;
  colorBy: ColorBy;
  datasetId: string | null;
}

export class ViewStateStore extends Store<ViewState> {
  constructor() {
    super({ xScale: "linear", yScale: "linear", colorBy: "collection", datasetId: null });
  }

  update(patch: Partial<ViewState>): void {
    this.value = { ...this.value, ...patch };
    this.emit();
  }
}
