// Page wiring: editor, parameter form, view surface, stats. All
// geometry comes from the service; this file only moves payloads
// between the network layer and the drawing helpers.
import { abortPending, ApiError, checkHealth, isAbort, requestMesh } from "./api.js";
import { chartSpec } from "./histograms.js";
import { domainBounds, MgParseError, parseMgText } from "./mgtext.js";
import { buildRequestParams, DEFAULT_FORM, validateParams, } from "./params.js";
import { edgeSegments, loopShape, renderMode, segmentBounds, svgLoopMarkup, svgMeshMarkup, } from "./render.js";
import { fitToBounds, panBy, viewBoxAttr, zoomAt } from "./view.js";
const SAMPLE_MG = `SEGMENT
4
1 2 2 0
1 0.0 0.0
2 100.0 0.0
2 2 3 0
1 100.0 0.0
2 100.0 60.0
3 2 4 0
1 100.0 60.0
2 0.0 60.0
4 2 1 0
1 0.0 60.0
2 0.0 0.0
ENDRC
`;
const state = {
    form: { ...DEFAULT_FORM },
    last: null,
    lastSegments: [],
    view: { x: 0, y: 0, w: 1, h: 1 },
    dirty: false,
    boundaryOnly: false,
    busy: false,
};
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing element #${id}`);
    return node;
}
const editor = el("mg-editor");
const banner = el("banner");
const runButton = el("run");
const previewButton = el("preview");
const centerButton = el("center");
const svg = el("mesh-svg");
const layer = el("mesh-layer");
const canvas = el("mesh-canvas");
const viewport = el("viewport");
const statsPanel = el("stats");
const warningsPanel = el("warnings");
const chartsPanel = el("charts");
function formFromInputs() {
    return {
        spacing: el("spacing").value,
        method: el("method").value,
        factor: el("factor").value,
        afm_version: el("afm-version").value,
        swap: el("swap").value,
        smoothing: el("smoothing").checked,
        use_spline: el("use-spline").checked,
        final_edge_check: el("final-edge-check").checked,
        max_nodes: el("max-nodes").value,
    };
}
function showErrors(errors) {
    for (const field of ["spacing", "factor", "max-nodes"]) {
        const slot = el(`err-${field}`);
        slot.textContent = errors[field.replace("-", "_")] ?? "";
    }
}
function refreshControls() {
    state.form = formFromInputs();
    const errors = validateParams(state.form);
    showErrors(errors);
    const empty = editor.value.trim() === "";
    runButton.disabled = state.busy || empty || Object.keys(errors).length > 0;
    previewButton.disabled = empty;
}
function setBanner(text, kind) {
    banner.textContent = text;
    banner.className = kind;
}
function highlightLine(line) {
    const lines = editor.value.split("\n");
    if (line < 1 || line > lines.length)
        return;
    let start = 0;
    for (let i = 0; i < line - 1; i++)
        start += lines[i].length + 1;
    editor.focus();
    editor.setSelectionRange(start, start + lines[line - 1].length);
}
function applyView() {
    svg.setAttribute("viewBox", viewBoxAttr(state.view));
    const scale = state.view.w / Math.max(1, viewport.clientWidth);
    // keep hairlines hairline while zooming
    for (const node of layer.querySelectorAll("line.interior")) {
        node.setAttribute("stroke-width", `${scale}`);
    }
    for (const node of layer.querySelectorAll("line.boundary, path.loop")) {
        node.setAttribute("stroke-width", `${2 * scale}`);
    }
    if (canvas.style.display !== "none")
        drawCanvas();
}
function drawCanvas() {
    const ctx = canvas.getContext("2d");
    if (!ctx)
        return;
    const w = viewport.clientWidth;
    const h = viewport.clientHeight;
    canvas.width = w;
    canvas.height = h;
    ctx.clearRect(0, 0, w, h);
    const sx = w / state.view.w;
    const sy = h / state.view.h;
    const tx = (x) => (x - state.view.x) * sx;
    const ty = (y) => (y - state.view.y) * sy;
    for (const pass of [false, true]) {
        ctx.beginPath();
        for (const s of state.lastSegments) {
            if (s.boundary !== pass)
                continue;
            if (pass === false && state.boundaryOnly)
                continue;
            ctx.moveTo(tx(s.x1), ty(s.y1));
            ctx.lineTo(tx(s.x2), ty(s.y2));
        }
        ctx.strokeStyle = pass ? "#c03030" : "#607080";
        ctx.lineWidth = pass ? 1.6 : 0.8;
        ctx.stroke();
    }
}
function showMesh(response) {
    state.last = response;
    state.lastSegments = edgeSegments(response.mesh);
    const [minx, miny, maxx, maxy] = segmentBounds(state.lastSegments);
    state.view = fitToBounds(minx, miny, maxx, maxy);
    const mode = renderMode(response.mesh.edges.length);
    if (mode === "svg") {
        layer.innerHTML = svgMeshMarkup(state.lastSegments, 1);
        canvas.style.display = "none";
        svg.style.display = "";
    }
    else {
        layer.innerHTML = "";
        svg.style.display = "none";
        canvas.style.display = "";
    }
    svg.classList.toggle("boundary-only", state.boundaryOnly);
    applyView();
    showStats(response);
}
function showPreview() {
    let domain;
    try {
        domain = parseMgText(editor.value);
    }
    catch (err) {
        if (err instanceof MgParseError) {
            setBanner(err.message, "error");
            highlightLine(err.line);
        }
        else {
            setBanner(String(err), "error");
        }
        return;
    }
    setBanner("", "");
    state.last = null;
    state.lastSegments = [];
    const [minx, miny, maxx, maxy] = domainBounds(domain);
    state.view = fitToBounds(minx, -maxy, maxx, -miny);
    layer.innerHTML = svgLoopMarkup(domain.loops.map((l) => loopShape(l)), 1);
    canvas.style.display = "none";
    svg.style.display = "";
    applyView();
    statsPanel.innerHTML = domain.loops
        .map((l, i) => `<div>loop ${i + 1}: ${l.ccw ? "counterclockwise" : "clockwise"}</div>`)
        .join("");
    warningsPanel.innerHTML = "";
    chartsPanel.innerHTML = "";
}
function showStats(response) {
    const s = response.stats;
    statsPanel.innerHTML = [
        `<div>nodes: ${s.nodes}</div>`,
        `<div>edges: ${s.edges}</div>`,
        `<div>triangles: ${s.triangles}</div>`,
        `<div>loops: ${s.boundary_loops}, holes: ${s.holes}</div>`,
    ].join("");
    warningsPanel.innerHTML = response.warnings
        .map((w) => `<li><b>${w.code}</b> ${escapeHtml(w.message)}</li>`)
        .join("");
    chartsPanel.innerHTML = "";
    for (const [kind, h] of Object.entries(s.histograms)) {
        const spec = chartSpec(kind, h);
        const bars = spec.bars
            .map((b) => `<div class="bar-row"><span class="bar-label">${b.label}</span>` +
            `<span class="bar" style="width:${Math.round(b.frac * 100)}%"></span>` +
            `<span class="bar-count">${b.count}</span></div>`)
            .join("");
        chartsPanel.insertAdjacentHTML("beforeend", `<details class="chart"><summary>${spec.title} (n=${spec.population})</summary>` +
            `<div class="chart-rule">${escapeHtml(spec.rule)}</div>${bars}</details>`);
    }
}
function escapeHtml(text) {
    return text.replace(/[&<>"]/g, (c) => c === "&" ? "&amp;" : c === "<" ? "&lt;" : c === ">" ? "&gt;" : "&quot;");
}
async function run() {
    state.form = formFromInputs();
    const errors = validateParams(state.form);
    showErrors(errors);
    if (Object.keys(errors).length > 0)
        return;
    state.busy = true;
    refreshControls();
    setBanner("meshing…", "info");
    try {
        const response = await requestMesh(editor.value, buildRequestParams(state.form));
        setBanner("", "");
        showMesh(response);
    }
    catch (err) {
        if (isAbort(err))
            return; // a newer request took over
        if (err instanceof ApiError) {
            setBanner(err.message, "error");
            if (err.line !== null)
                highlightLine(err.line);
        }
        else {
            setBanner(`network failure: ${String(err)}`, "error");
        }
    }
    finally {
        state.busy = false;
        refreshControls();
    }
}
function centerView() {
    if (state.lastSegments.length > 0) {
        const [minx, miny, maxx, maxy] = segmentBounds(state.lastSegments);
        state.view = fitToBounds(minx, miny, maxx, maxy);
        applyView();
    }
    else {
        showPreview();
    }
}
function wireViewport() {
    let panning = false;
    let lastX = 0;
    let lastY = 0;
    viewport.addEventListener("mousedown", (e) => {
        panning = true;
        lastX = e.clientX;
        lastY = e.clientY;
        viewport.style.cursor = "grabbing";
    });
    window.addEventListener("mouseup", () => {
        panning = false;
        viewport.style.cursor = "grab";
    });
    viewport.addEventListener("mousemove", (e) => {
        if (!panning)
            return;
        state.view = panBy(state.view, e.clientX - lastX, e.clientY - lastY, viewport.clientWidth, viewport.clientHeight);
        lastX = e.clientX;
        lastY = e.clientY;
        applyView();
    });
    viewport.addEventListener("wheel", (e) => {
        e.preventDefault();
        const rect = viewport.getBoundingClientRect();
        const fx = (e.clientX - rect.left) / rect.width;
        const fy = (e.clientY - rect.top) / rect.height;
        state.view = zoomAt(state.view, fx, fy, e.deltaY < 0 ? 1 / 1.15 : 1.15);
        applyView();
    }, { passive: false });
}
function wireFileButtons() {
    el("load-mg").addEventListener("change", (e) => {
        const input = e.target;
        const file = input.files?.[0];
        if (!file)
            return;
        void file.text().then((text) => {
            editor.value = text;
            state.dirty = true;
            refreshControls();
        });
        input.value = "";
    });
    el("save-mg").addEventListener("click", () => {
        download("boundary.mg", editor.value, "text/plain");
        state.dirty = false;
    });
    el("save-json").addEventListener("click", () => {
        if (!state.last)
            return;
        download("mesh.json", JSON.stringify(state.last.mesh), "application/json");
    });
}
function download(name, text, type) {
    const blob = new Blob([text], { type });
    const url = URL.createObjectURL(blob);
    const a = document.createElement("a");
    a.href = url;
    a.download = name;
    a.click();
    URL.revokeObjectURL(url);
}
function init() {
    editor.value = SAMPLE_MG;
    editor.addEventListener("input", () => {
        state.dirty = true;
        refreshControls();
    });
    for (const id of ["spacing", "factor", "max-nodes"]) {
        el(id).addEventListener("input", refreshControls);
    }
    for (const id of ["method", "afm-version", "swap"]) {
        el(id).addEventListener("change", refreshControls);
    }
    for (const id of ["smoothing", "use-spline", "final-edge-check"]) {
        el(id).addEventListener("change", refreshControls);
    }
    el("boundary-only").addEventListener("change", (e) => {
        state.boundaryOnly = e.target.checked;
        svg.classList.toggle("boundary-only", state.boundaryOnly);
        if (canvas.style.display !== "none")
            drawCanvas();
    });
    runButton.addEventListener("click", () => void run());
    previewButton.addEventListener("click", showPreview);
    centerButton.addEventListener("click", centerView);
    wireViewport();
    wireFileButtons();
    window.addEventListener("beforeunload", (e) => {
        if (state.dirty)
            e.preventDefault();
    });
    window.addEventListener("unload", abortPending);
    void checkHealth().then((ok) => {
        if (!ok)
            setBanner("service unreachable; is `trigrid serve` running?", "error");
    });
    refreshControls();
    showPreview();
}
init();
