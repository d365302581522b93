// Histogram payloads -> bar chart specs. Labels are rebuilt from the
// bin width the same way the server names them, so both sides agree.

import type { HistogramPayload } from "./types.js";

export const KIND_TITLES: Record<string, string> = {
  edges_per_node: "Edges per node",
  triangles_per_node: "Triangles per node",
  triangle_area: "Triangle area vs target",
  edge_length: "Edge length vs target",
  angle: "Angles vs 60°",
};

export function binLabel(width: number, index: number, bins: number): string {
  const last = index === bins - 1;
  if (width === 1) {
    return last ? `${index}+` : `${index}`;
  }
  const lo = index * width;
  return last ? `${lo}%+` : `${lo}%..${lo + width}%`;
}

export interface Bar {
  label: string;
  count: number;
  frac: number; // of the tallest bar, for drawing
}

export interface ChartSpec {
  title: string;
  rule: string;
  population: number;
  bars: Bar[];
}

export function chartSpec(kind: string, h: HistogramPayload): ChartSpec {
  const peak = Math.max(1, ...h.counts);
  return {
    title: KIND_TITLES[kind] ?? kind,
    rule: h.bin_rule,
    population: h.population,
    bars: h.counts.map((count, i) => ({
      label: binLabel(h.width, i, h.counts.length),
      count,
      frac: count / peak,
    })),
  };
}
