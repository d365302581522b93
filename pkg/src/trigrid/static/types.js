// Shapes of the /api/mesh payloads, plus runtime guards for them.
// The UI never invents geometry: everything rendered comes out of one
// of these objects, so the guards are strict about what they accept.
function isRecord(v) {
    return typeof v === "object" && v !== null && !Array.isArray(v);
}
function numberRows(v, width) {
    return (Array.isArray(v) &&
        v.every((row) => Array.isArray(row) &&
            row.length === width &&
            row.every((x) => typeof x === "number")));
}
function bad(where) {
    throw new Error(`malformed response: ${where}`);
}
export function parseMeshPayload(v) {
    if (!isRecord(v))
        bad("mesh is not an object");
    if (!numberRows(v.nodes, 2))
        bad("mesh.nodes");
    if (!numberRows(v.edges, 5))
        bad("mesh.edges");
    if (!numberRows(v.triangles, 3))
        bad("mesh.triangles");
    return v;
}
function parseHistogram(name, v) {
    if (!isRecord(v))
        bad(`histogram ${name}`);
    const { counts, population, width, bin_rule } = v;
    if (!Array.isArray(counts) || !counts.every((c) => typeof c === "number"))
        bad(`histogram ${name}.counts`);
    if (typeof population !== "number")
        bad(`histogram ${name}.population`);
    if (typeof width !== "number")
        bad(`histogram ${name}.width`);
    if (typeof bin_rule !== "string")
        bad(`histogram ${name}.bin_rule`);
    return { counts, population, width, bin_rule };
}
export function parseMeshResponse(v) {
    if (!isRecord(v))
        bad("body is not an object");
    const mesh = parseMeshPayload(v.mesh);
    if (!isRecord(v.stats))
        bad("stats");
    const s = v.stats;
    for (const key of ["nodes", "edges", "triangles", "boundary_loops", "holes"]) {
        if (typeof s[key] !== "number")
            bad(`stats.${key}`);
    }
    if (!(typeof s.euler_ok === "boolean" || s.euler_ok === null))
        bad("stats.euler_ok");
    if (!isRecord(s.histograms))
        bad("stats.histograms");
    const histograms = {};
    for (const [name, h] of Object.entries(s.histograms)) {
        histograms[name] = parseHistogram(name, h);
    }
    if (!Array.isArray(v.warnings))
        bad("warnings");
    const warnings = v.warnings.map((w) => {
        if (!isRecord(w) || typeof w.code !== "string" || typeof w.message !== "string")
            bad("warnings entry");
        return { code: w.code, message: w.message };
    });
    return {
        mesh,
        stats: {
            nodes: s.nodes,
            edges: s.edges,
            triangles: s.triangles,
            boundary_loops: s.boundary_loops,
            holes: s.holes,
            euler_ok: s.euler_ok,
            histograms,
        },
        warnings,
    };
}
