/** Central view state: one store, subscriber callbacks, stale-request guards. */

export type Tab = "browse" | "compare" | "combine" | "create";

export interface PendingConstraint {
  featureId: string;
  targetBin: number;
}

export interface ViewState {
  activeTab: Tab;
  datasetId: string;
  attribute: string;
  binCount: number;
  definedIntervalSize: number | null;
  paletteName: string;
  reversePalette: boolean;
  flagFilters: string[];
  cardOrder: string[];
  hiddenMethods: string[];
  combineMembers: string[];
  paintSelectedBin: number | null;
  pendingConstraints: PendingConstraint[];
}

export const DEFAULT_COMBINE_MEMBERS = [
  "equal_interval",
  "quantile",
  "maximum_breaks",
  "natural_breaks",
  "ckmeans",
  "geometric_interval",
  "percentile",
  "box_plot",
];

export function initialState(): ViewState {
  return {
    activeTab: "browse",
    datasetId: "life-expectancy-sample",
    attribute: "life_expectancy",
    binCount: 5,
    definedIntervalSize: null,
    paletteName: "viridis",
    reversePalette: false,
    flagFilters: [],
    cardOrder: [],
    hiddenMethods: [],
    combineMembers: [...DEFAULT_COMBINE_MEMBERS],
    paintSelectedBin: null,
    pendingConstraints: [],
  };
}

export class Store {
  state: ViewState;
  private listeners = new Set<(state: ViewState) => void>();
  private generations = new Map<string, number>();

  constructor(state: ViewState = initialState()) {
    this.state = state;
  }

  subscribe(listener: (state: ViewState) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  update(partial: Partial<ViewState>): void {
    if (partial.paintSelectedBin != null) {
      const tab = partial.activeTab ?? this.state.activeTab;
      if (tab !== "create") {
        throw new Error("paint selection is only active in the create tab");
      }
    }
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) listener(this.state);
  }

  setTab(tab: Tab): void {
    // leaving the create tab always clears the paint session
    if (tab !== "create") {
      this.state = { ...this.state, paintSelectedBin: null, pendingConstraints: [] };
    }
    this.update({ activeTab: tab });
  }

  /** Reorder one card; the order stays a permutation of the known methods. */
  moveCard(methodId: string, toIndex: number): void {
    const order = [...this.state.cardOrder];
    const from = order.indexOf(methodId);
    if (from < 0 || toIndex < 0 || toIndex >= order.length) return;
    order.splice(from, 1);
    order.splice(toIndex, 0, methodId);
    this.setCardOrder(order);
  }

  setCardOrder(order: string[]): void {
    const before = [...this.state.cardOrder].sort();
    const after = [...order].sort();
    if (before.length !== after.length || before.some((m, i) => m !== after[i])) {
      throw new Error("card order must be a permutation of the known methods");
    }
    this.update({ cardOrder: order });
  }

  toggleHidden(methodId: string): void {
    const hidden = this.state.hiddenMethods.includes(methodId)
      ? this.state.hiddenMethods.filter((m) => m !== methodId)
      : [...this.state.hiddenMethods, methodId];
    this.update({ hiddenMethods: hidden });
  }

  /** Bump and return the generation for a request key. */
  nextGeneration(key: string): number {
    const next = (this.generations.get(key) ?? 0) + 1;
    this.generations.set(key, next);
    return next;
  }

  /** True when the response for this generation is still the latest. */
  isCurrent(key: string, generation: number): boolean {
    return (this.generations.get(key) ?? 0) === generation;
  }
}
