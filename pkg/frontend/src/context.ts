/** Shared app context handed to every view. */

import type { ApiClient } from "./api.js";
import type { Store } from "./state.js";
import type {
  BinningResult,
  FeatureCollection,
  MethodDescriptor,
  PaletteWire,
} from "./types.js";

export interface AppContext {
  api: ApiClient;
  store: Store;
  geometry: FeatureCollection;
  methods: MethodDescriptor[];
  palette: PaletteWire;
  /** Browse result cache, keyed by method id; views read, never recompute. */
  results: Map<string, BinningResult>;
}

export function methodsDependingOn(ctx: AppContext, parameter: string): string[] {
  return ctx.methods
    .filter((descriptor) => descriptor.parameters.some((p) => p.name === parameter))
    .map((descriptor) => descriptor.methodId);
}

export function specFor(ctx: AppContext, methodId: string) {
  const { binCount, definedIntervalSize } = ctx.store.state;
  const spec: Record<string, unknown> = { methodId };
  const descriptor = ctx.methods.find((d) => d.methodId === methodId);
  for (const parameter of descriptor?.parameters ?? []) {
    if (parameter.name === "bin_count") spec.binCount = binCount;
    if (parameter.name === "defined_interval_size" && definedIntervalSize != null) {
      spec.definedIntervalSize = definedIntervalSize;
    }
  }
  return spec as { methodId: string; binCount?: number; definedIntervalSize?: number };
}
