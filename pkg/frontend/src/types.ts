/** Wire types mirroring the binx service JSON exactly. */

export interface MethodSpecWire {
  methodId: string;
  binCount?: number;
  definedIntervalSize?: number | null;
  manualBreaks?: number[];
  memberMethods?: string[];
  stdDevStep?: string;
  iqrFactor?: number;
  headTailThreshold?: number;
  expGrowth?: number;
}

export interface BinningResult {
  method: MethodSpecWire;
  extents: number[];
  binSizes: number[];
  assignments: Record<string, number | null>;
  notes: string[];
  unclassedPositions?: Record<string, number | null>;
}

export interface MethodDescriptor {
  methodId: string;
  displayName: string;
  category: string;
  shortDescription: string;
  longDescription: string;
  parameters: { name: string; type: string; default: unknown }[];
}

export interface CombineFeatureRow {
  bins: number[];
  majorityBin: number;
  majorityFrequency: number;
}

export interface CombineResponse {
  matrix: { methods: string[]; features: Record<string, CombineFeatureRow> };
  resiliency: BinningResult;
}

export interface CompareBin {
  extent: [number, number];
  interval: number;
  size: number;
}

export interface CompareResponse {
  methods: { methodId: string; binCount: number; bins: CompareBin[] }[];
}

export interface PaintConstraintWire {
  featureId?: string;
  value?: number;
  targetBin: number;
}

export interface PaintResponse {
  extents: number[];
  warning: string;
  notes: string[];
}

export interface PaletteWire {
  name: string;
  scaleType: string;
  flags: { webFriendly: boolean; colorblindFriendly: boolean; printFriendly: boolean };
  colors?: Record<string, string[]>;
  interpolator?: { stops: string[]; cyclical?: boolean };
  nodataColor: string;
  custom?: boolean;
}

export interface GeoFeature {
  type: "Feature";
  properties: Record<string, unknown> & { __id: string; __value: number | null };
  geometry: { type: "Polygon" | "MultiPolygon"; coordinates: unknown };
}

export interface FeatureCollection {
  type: "FeatureCollection";
  features: GeoFeature[];
}

export interface ProfileWire {
  count: number;
  missingCount: number;
  min: number;
  max: number;
  mean: number;
  median: number;
  stdDev: number;
  skewness: number;
  histogram: { edges: number[]; counts: number[] };
  kde: { grid: number[]; density: number[] };
}

export interface CustomMethodWire {
  name: string;
  extents: number[];
  provenance: Record<string, unknown>;
  createdAt: string;
}
