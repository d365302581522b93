// Shapes of the /api/mesh payloads, plus runtime guards for them.
// The UI never invents geometry: everything rendered comes out of one
// of these objects, so the guards are strict about what they accept.

export type NodeRow = [number, number];
export type EdgeRow = [number, number, number, number, number];
export type TriangleRow = [number, number, number];

export interface MeshPayload {
  nodes: NodeRow[];
  edges: EdgeRow[];
  triangles: TriangleRow[];
}

export interface HistogramPayload {
  counts: number[];
  population: number;
  width: number;
  bin_rule: string;
}

export interface StatsPayload {
  nodes: number;
  edges: number;
  triangles: number;
  boundary_loops: number;
  holes: number;
  euler_ok: boolean | null;
  histograms: Record<string, HistogramPayload>;
}

export interface WarningPayload {
  code: string;
  message: string;
}

export interface MeshResponse {
  mesh: MeshPayload;
  stats: StatsPayload;
  warnings: WarningPayload[];
}

function isRecord(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function numberRows(v: unknown, width: number): boolean {
  return (
    Array.isArray(v) &&
    v.every(
      (row) =>
        Array.isArray(row) &&
        row.length === width &&
        row.every((x) => typeof x === "number"),
    )
  );
}

function bad(where: string): never {
  throw new Error(`malformed response: ${where}`);
}

export function parseMeshPayload(v: unknown): MeshPayload {
  if (!isRecord(v)) bad("mesh is not an object");
  if (!numberRows(v.nodes, 2)) bad("mesh.nodes");
  if (!numberRows(v.edges, 5)) bad("mesh.edges");
  if (!numberRows(v.triangles, 3)) bad("mesh.triangles");
  return v as unknown as MeshPayload;
}

function parseHistogram(name: string, v: unknown): HistogramPayload {
  if (!isRecord(v)) bad(`histogram ${name}`);
  const { counts, population, width, bin_rule } = v;
  if (!Array.isArray(counts) || !counts.every((c) => typeof c === "number"))
    bad(`histogram ${name}.counts`);
  if (typeof population !== "number") bad(`histogram ${name}.population`);
  if (typeof width !== "number") bad(`histogram ${name}.width`);
  if (typeof bin_rule !== "string") bad(`histogram ${name}.bin_rule`);
  return { counts, population, width, bin_rule };
}

export function parseMeshResponse(v: unknown): MeshResponse {
  if (!isRecord(v)) bad("body is not an object");
  const mesh = parseMeshPayload(v.mesh);
  if (!isRecord(v.stats)) bad("stats");
  const s = v.stats;
  for (const key of ["nodes", "edges", "triangles", "boundary_loops", "holes"]) {
    if (typeof s[key] !== "number") bad(`stats.${key}`);
  }
  if (!(typeof s.euler_ok === "boolean" || s.euler_ok === null)) bad("stats.euler_ok");
  if (!isRecord(s.histograms)) bad("stats.histograms");
  const histograms: Record<string, HistogramPayload> = {};
  for (const [name, h] of Object.entries(s.histograms)) {
    histograms[name] = parseHistogram(name, h);
  }
  if (!Array.isArray(v.warnings)) bad("warnings");
  const warnings = v.warnings.map((w): WarningPayload => {
    if (!isRecord(w) || typeof w.code !== "string" || typeof w.message !== "string")
      bad("warnings entry");
    return { code: w.code, message: w.message };
  });
  return {
    mesh,
    stats: {
      nodes: s.nodes as number,
      edges: s.edges as number,
      triangles: s.triangles as number,
      boundary_loops: s.boundary_loops as number,
      holes: s.holes as number,
      euler_ok: s.euler_ok as boolean | null,
      histograms,
    },
    warnings,
  };
}
