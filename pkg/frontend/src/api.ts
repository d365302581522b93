// Transport to the mesh service. One request in flight at a time: a
// newer submission aborts the older one, whose caller sees an abort
// instead of a stale result.

import { parseMeshResponse, type MeshResponse } from "./types.js";
import type { RequestParams } from "./params.js";

export class ApiError extends Error {
  status: number;
  line: number | null;
  code: string | null;
  constructor(status: number, message: string, line: number | null = null, code: string | null = null) {
    super(message);
    this.status = status;
    this.line = line;
    this.code = code;
  }
}

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

let inFlight: AbortController | null = null;

export function abortPending(): void {
  if (inFlight) {
    inFlight.abort();
    inFlight = null;
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}

export async function requestMesh(
  mg: string,
  params: RequestParams,
  fetchFn: FetchLike = fetch,
): Promise<MeshResponse> {
  abortPending();
  const controller = new AbortController();
  inFlight = controller;
  try {
    const response = await fetchFn("/api/mesh", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ mg, params }),
      signal: controller.signal,
    });
    const body: unknown = await response.json().catch(() => null);
    if (!response.ok) {
      throw toApiError(response.status, body);
    }
    return parseMeshResponse(body);
  } finally {
    if (inFlight === controller) inFlight = null;
  }
}

function toApiError(status: number, body: unknown): ApiError {
  if (typeof body === "object" && body !== null) {
    const rec = body as Record<string, unknown>;
    if (typeof rec.error === "string") {
      return new ApiError(
        status,
        rec.error,
        typeof rec.line === "number" ? rec.line : null,
        typeof rec.code === "string" ? rec.code : null,
      );
    }
    if (Array.isArray(rec.detail)) {
      const first = rec.detail[0] as Record<string, unknown> | undefined;
      const msg = first && typeof first.msg === "string" ? first.msg : "invalid request";
      return new ApiError(status, msg);
    }
  }
  return new ApiError(status, `request failed with status ${status}`);
}

export async function checkHealth(fetchFn: FetchLike = fetch): Promise<boolean> {
  try {
    const response = await fetchFn("/api/health", { method: "GET" });
    if (!response.ok) return false;
    const body = (await response.json()) as { ok?: boolean };
    return body.ok === true;
  } catch {
    return false;
  }
}
