/** Thin fetch client over the binx HTTP service. */

import type {
  BinningResult,
  CombineResponse,
  CompareResponse,
  CustomMethodWire,
  FeatureCollection,
  MethodDescriptor,
  MethodSpecWire,
  PaintConstraintWire,
  PaintResponse,
  PaletteWire,
  ProfileWire,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<never> {
  let code = "UnknownError";
  let message = response.statusText;
  try {
    const body = await response.json();
    code = body.code ?? code;
    message = body.message ?? message;
  } catch {
    /* non-JSON error body */
  }
  throw new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(public baseUrl: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.baseUrl + path);
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  methods(): Promise<MethodDescriptor[]> {
    return this.get("/api/methods");
  }

  geometry(datasetId: string): Promise<FeatureCollection> {
    return this.get(`/api/datasets/${encodeURIComponent(datasetId)}/geometry`);
  }

  datasetInfo(datasetId: string): Promise<{ datasetId: string; attribute: string; profile: ProfileWire }> {
    return this.get(`/api/datasets/${encodeURIComponent(datasetId)}`);
  }

  datasets(): Promise<{ datasets: string[] }> {
    return this.get("/api/datasets");
  }

  bin(datasetId: string, spec: MethodSpecWire): Promise<BinningResult> {
    return this.post("/api/bin", { datasetId, spec });
  }

  binAll(
    datasetId: string,
    binCount: number,
    definedIntervalSize: number | null,
  ): Promise<Record<string, BinningResult>> {
    return this.post("/api/bin/all", { datasetId, binCount, definedIntervalSize });
  }

  compare(
    datasetId: string,
    methods: string[] | null,
    binCount: number,
    definedIntervalSize: number | null,
  ): Promise<CompareResponse> {
    return this.post("/api/compare", { datasetId, methods, binCount, definedIntervalSize });
  }

  combine(datasetId: string, members: string[], k: number): Promise<CombineResponse> {
    return this.post("/api/combine", { datasetId, members, k });
  }

  paint(
    datasetId: string,
    extents: number[],
    constraints: PaintConstraintWire[],
  ): Promise<PaintResponse> {
    return this.post("/api/paint", { datasetId, extents, constraints });
  }

  palettes(flags: string[]): Promise<{ palettes: PaletteWire[] }> {
    const query = flags.length ? `?flags=${flags.join(",")}` : "";
    return this.get(`/api/palettes${query}`);
  }

  saveCustomMethod(
    name: string,
    extents: number[],
    provenance: Record<string, unknown>,
  ): Promise<CustomMethodWire> {
    return this.post("/api/custom-methods", { name, extents, provenance });
  }

  exportTarget(datasetId: string, spec: MethodSpecWire, what: string, palette: string, reverse: boolean): Promise<Response> {
    return fetch(this.baseUrl + "/api/export", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ datasetId, spec, what, palette, reverse }),
    });
  }
}
