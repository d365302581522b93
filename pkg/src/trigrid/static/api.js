// Transport to the mesh service. One request in flight at a time: a
// newer submission aborts the older one, whose caller sees an abort
// instead of a stale result.
import { parseMeshResponse } from "./types.js";
export class ApiError extends Error {
    status;
    line;
    code;
    constructor(status, message, line = null, code = null) {
        super(message);
        this.status = status;
        this.line = line;
        this.code = code;
    }
}
let inFlight = null;
export function abortPending() {
    if (inFlight) {
        inFlight.abort();
        inFlight = null;
    }
}
export function isAbort(err) {
    return err instanceof DOMException && err.name === "AbortError";
}
export async function requestMesh(mg, params, fetchFn = fetch) {
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
        const body = await response.json().catch(() => null);
        if (!response.ok) {
            throw toApiError(response.status, body);
        }
        return parseMeshResponse(body);
    }
    finally {
        if (inFlight === controller)
            inFlight = null;
    }
}
function toApiError(status, body) {
    if (typeof body === "object" && body !== null) {
        const rec = body;
        if (typeof rec.error === "string") {
            return new ApiError(status, rec.error, typeof rec.line === "number" ? rec.line : null, typeof rec.code === "string" ? rec.code : null);
        }
        if (Array.isArray(rec.detail)) {
            const first = rec.detail[0];
            const msg = first && typeof first.msg === "string" ? first.msg : "invalid request";
            return new ApiError(status, msg);
        }
    }
    return new ApiError(status, `request failed with status ${status}`);
}
export async function checkHealth(fetchFn = fetch) {
    try {
        const response = await fetchFn("/api/health", { method: "GET" });
        if (!response.ok)
            return false;
        const body = (await response.json());
        return body.ok === true;
    }
    catch {
        return false;
    }
}
