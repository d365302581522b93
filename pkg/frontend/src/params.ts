// Form state -> request params, with the same bounds the server enforces
// so a bad factor never even leaves the page.

export interface ParamsForm {
  spacing: string;
  method: "delaunay" | "afm" | "steiner";
  factor: string;
  afm_version: "first" | "smallest";
  swap: "delaunay" | "minmax" | "none";
  smoothing: boolean;
  use_spline: boolean;
  final_edge_check: boolean;
  max_nodes: string;
}

export interface RequestParams {
  spacing: string;
  method: string;
  factor: number;
  afm_version: string;
  swap: string;
  smoothing: boolean;
  use_spline: boolean;
  final_edge_check: boolean;
  max_nodes: number | null;
  dry_run: boolean;
}

export const DEFAULT_FORM: ParamsForm = {
  spacing: "uniform:10",
  method: "steiner",
  factor: "1.0",
  afm_version: "first",
  swap: "delaunay",
  smoothing: true,
  use_spline: false,
  final_edge_check: true,
  max_nodes: "",
};

const SPACING_ARITY: Record<string, number[]> = {
  uniform: [1],
  circular: [3, 5],
  stripe: [4, 6],
};

// centers and the stripe angle may be any finite number; everything
// before them has to be positive
const POSITIVE_PREFIX: Record<string, number> = {
  uniform: 1,
  circular: 3,
  stripe: 2,
};

export function spacingError(spec: string): string | null {
  const trimmed = spec.trim();
  if (!trimmed) return "spacing is required";
  const colon = trimmed.indexOf(":");
  const kind = (colon < 0 ? trimmed : trimmed.slice(0, colon)).trim().toLowerCase();
  const arity = SPACING_ARITY[kind];
  if (!arity) return `unknown spacing kind "${kind}"`;
  const rest = colon < 0 ? "" : trimmed.slice(colon + 1);
  const parts = rest.split(",").map((p) => p.trim());
  if (parts.length === 1 && parts[0] === "") {
    return `${kind} spacing needs ${arity.join(" or ")} numbers`;
  }
  const values = parts.map(Number);
  if (values.some((v) => !Number.isFinite(v))) return "spacing values must be numbers";
  if (!arity.includes(values.length)) {
    return `${kind} spacing needs ${arity.join(" or ")} numbers, got ${values.length}`;
  }
  const positive = POSITIVE_PREFIX[kind] ?? 0;
  for (let i = 0; i < positive; i++) {
    if (!((values[i] ?? 0) > 0)) return `${kind} spacing value ${i + 1} must be > 0`;
  }
  if (kind === "stripe" && !((values[3] ?? 0) > 0)) {
    return "stripe spacing needs a positive length";
  }
  return null;
}

export function validateParams(form: ParamsForm): Record<string, string> {
  const errors: Record<string, string> = {};
  const spacingProblem = spacingError(form.spacing);
  if (spacingProblem) errors.spacing = spacingProblem;
  const factor = Number(form.factor);
  if (!Number.isFinite(factor)) {
    errors.factor = "factor must be a number";
  } else if (factor < 1 || factor > 3) {
    errors.factor = "factor must be between 1 and 3";
  }
  if (form.max_nodes.trim() !== "") {
    const n = Number(form.max_nodes);
    if (!Number.isInteger(n) || n < 3) {
      errors.max_nodes = "max nodes must be an integer of at least 3";
    }
  }
  return errors;
}

export function buildRequestParams(form: ParamsForm, dryRun = false): RequestParams {
  return {
    spacing: form.spacing.trim(),
    method: form.method,
    factor: Number(form.factor),
    afm_version: form.afm_version,
    swap: form.swap,
    smoothing: form.smoothing,
    use_spline: form.use_spline,
    final_edge_check: form.final_edge_check,
    max_nodes: form.max_nodes.trim() === "" ? null : Number(form.max_nodes),
    dry_run: dryRun,
  };
}
